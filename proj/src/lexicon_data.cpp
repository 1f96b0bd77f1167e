#include "lexicon_data.hpp"

#include <sstream>

namespace zipfsignal::lingproc::detail {

namespace {

// "base:form,form,..." records, expanded into form -> base at startup.
constexpr const char* kIrregularVerbs[] = {
    "be:am,is,are,was,were,been,being",
    "have:has,had,having",
    "do:does,did,done,doing",
    "say:said,says",
    "go:went,gone,goes",
    "get:got,gotten",
    "make:made",
    "know:knew,known",
    "think:thought",
    "take:took,taken",
    "see:saw,seen",
    "come:came",
    "find:found",
    "give:gave,given",
    "tell:told",
    "become:became",
    "show:showed,shown",
    "leave:left",
    "feel:felt",
    "bring:brought",
    "begin:began,begun",
    "keep:kept",
    "hold:held",
    "write:wrote,written",
    "stand:stood",
    "hear:heard",
    "mean:meant",
    "meet:met",
    "run:ran",
    "pay:paid",
    "sit:sat",
    "speak:spoke,spoken",
    "lie:lay,lain",
    "lead:led",
    "grow:grew,grown",
    "lose:lost",
    "fall:fell,fallen",
    "send:sent",
    "build:built",
    "understand:understood",
    "draw:drew,drawn",
    "break:broke,broken",
    "spend:spent",
    "rise:rose,risen",
    "drive:drove,driven",
    "buy:bought",
    "wear:wore,worn",
    "choose:chose,chosen",
    "seek:sought",
    "throw:threw,thrown",
    "catch:caught",
    "deal:dealt",
    "win:won",
    "forget:forgot,forgotten",
    "lay:laid",
    "strike:struck",
    "shake:shook,shaken",
    "fight:fought",
    "bear:bore,borne",
    "sell:sold",
    "beat:beaten",
    "swing:swung",
    "shrink:shrank,shrunk",
    "sink:sank,sunk",
    "spring:sprang,sprung",
    "sweep:swept",
    "swim:swam,swum",
    "teach:taught",
    "tear:tore,torn",
    "wake:woke,woken",
    "weep:wept",
    "slide:slid",
    "stick:stuck",
    "sting:stung",
    "shoot:shot",
    "sing:sang,sung",
    "sleep:slept",
    "steal:stole,stolen",
    "eat:ate,eaten",
    "fly:flew,flown",
    "freeze:froze,frozen",
    "hang:hung",
    "hide:hid,hidden",
    "lend:lent",
    "light:lit",
    "ride:rode,ridden",
    "ring:rang,rung",
    "feed:fed",
    "bend:bent",
    "bind:bound",
    "blow:blew,blown",
    "cling:clung",
    "dig:dug",
    "swear:swore,sworn",
    // Invariant forms (base == past == participle) map to themselves so a
    // lookup hit still forces the VERB reading.
    "put:put", "let:let", "set:set", "cut:cut", "hit:hit", "hurt:hurt",
    "quit:quit", "shut:shut", "spread:spread", "split:split", "cost:cost",
    "bet:bet", "burst:burst", "cast:cast", "read:read",
};

constexpr const char* kAuxVerbs =
    "be:be am:be is:be are:be was:be were:be been:be being:be "
    "have:have has:have had:have having:have "
    "do:do does:do did:do "
    "will:will would:would can:can could:could may:may might:might "
    "shall:shall should:should must:must ought:ought";

constexpr const char* kVerbLexicon =
    "rise fall close gain lose drop plunge soar rally climb slip slide surge "
    "tumble jump rebound slump dip ease edge advance decline retreat recover "
    "trade open move end finish settle report expect forecast predict warn "
    "announce post raise lift boost push pull drag weigh hurt help support "
    "lead follow track watch target touch reach top exceed beat miss fail "
    "struggle suffer add shed erase pare trim extend halt pause resume "
    "continue remain stay hover fluctuate swing stabilize steady strengthen "
    "weaken firm soften improve worsen deteriorate value price cost buy sell "
    "hold own acquire merge invest fund finance lend borrow owe pay repay "
    "default restructure bail rescue inject pump print issue offer list float "
    "launch start begin cease stop quit suspend surprise disappoint cheer "
    "spook rattle shake roil calm soothe worry fear hope bet speculate hedge "
    "cover unwind liquidate dump offload accumulate allocate rotate shift "
    "flee flock pour flow tighten loosen expand contract grow shrink slow "
    "accelerate stall freeze thaw spark fuel stoke dampen curb cap limit "
    "restrict regulate probe investigate fine sue appeal rule decide vote "
    "approve reject pass block veto delay postpone schedule host attend meet "
    "discuss negotiate agree disagree sign seal clinch secure win award grant "
    "deny refuse accept confirm dismiss downplay highlight stress note "
    "observe see view consider assess review revise update upgrade downgrade "
    "maintain reiterate affirm estimate project anticipate foresee signal "
    "indicate suggest imply show reveal disclose unveil release publish want "
    "need like love hate work live play look seem appear become turn prove "
    "call name ask answer reply respond talk speak argue claim state declare "
    "insist admit acknowledge believe think know understand learn teach study "
    "test try attempt manage handle run operate produce create generate "
    "develop design plan prepare provide supply deliver ship send receive "
    "obtain collect gather include exclude contain involve require demand "
    "order request use employ apply serve act perform achieve complete "
    "conclude give take make say go get come find tell leave feel bring keep "
    "write stand hear mean put let set cut hit read pare widen narrow soar "
    "control cancel total equal near double triple halve outperform "
    "underperform overtake trail lag mirror echo defy buck resist withstand "
    "absorb digest price weather navigate brace position unload snap rocket "
    "crater crash collapse implode evaporate vanish melt boom bust burst "
    "spike dive sink plummet skid stumble waver wobble drift creep inch "
    "grind churn whipsaw gyrate oscillate trend head point stage mount post "
    "log notch mark record register chalk rack erode dent hammer batter "
    "pummel punish reward favor shun avoid embrace adopt abandon exit enter "
    "join leave spin divest wind shutter mothball idle furlough hire fire "
    "recruit retain promote demote appoint resign retire succeed replace "
    "oust sack name nominate elect vindicate";

constexpr const char* kNounLexicon =
    "stock share market index price rate bank fund investor trader analyst "
    "economy growth profit loss revenue sale earning forecast report company "
    "firm group sector industry bond yield dollar euro pound yen oil gold "
    "commodity currency exchange deal merger bid offer debt loan credit "
    "mortgage crisis recession recovery rally decline gain fall rise drop "
    "surge slump point percent week month year day quarter session level "
    "record high low peak trough volume value demand supply output production "
    "inflation deflation unemployment job wage salary tax budget deficit "
    "surplus government policy regulation rule law chief executive officer "
    "chairman president minister secretary board shareholder stakeholder "
    "customer consumer client business enterprise subsidiary unit division "
    "branch office headquarters plant factory product service brand news "
    "announcement statement comment remark speech meeting conference summit "
    "talk negotiation agreement contract pact treaty impression concern worry "
    "fear hope optimism pessimism sentiment confidence outlook expectation "
    "target goal plan strategy move step measure action effort attempt result "
    "outcome effect impact consequence cause reason factor condition "
    "situation environment climate trend pattern signal sign indicator datum "
    "data figure number amount sum total stake position portfolio asset "
    "liability equity capital cash money payment dividend buyback split "
    "morning evening building holding warning rating briefing hearing "
    "offering opening closing thing something anything "
    "nothing everything people person man woman child family home house car "
    "time place world country nation state city region area part side end "
    "beginning middle center top bottom front back line row column list item "
    "case instance example way manner method approach system process program "
    "project scheme series species analysis basis crisis hypothesis emphasis "
    "bubble crash boom bust herd voice language word verb noun phrase "
    "sentence article newspaper journalist commentator reporter editor "
    "bellhop tip view perception disagreement "
    "volatility risk return reward margin spread future option derivative "
    "swap hedge short long bull bear correction rebound bounce dip bottom "
    "ceiling floor resistance bargain barrier threshold limit cap range band "
    "average mean median deviation variance correlation distribution "
    "frequency count measure metric model theory method data set sample "
    "population test experiment study research paper finding evidence";

constexpr const char* kDeterminers =
    "the a an this that these those my your his her its our their no some any "
    "each every another either neither such both all half several many few "
    "much more most less least enough what which whose";

constexpr const char* kNumerals =
    "one two three four five six seven eight nine ten eleven twelve thirteen "
    "fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty "
    "fifty sixty seventy eighty ninety hundred thousand million billion "
    "trillion dozen first second third fourth fifth sixth seventh eighth "
    "ninth tenth";

constexpr const char* kFunctionWords =
    "of in on at by for with from as into onto over under between among "
    "through during after before about against amid amidst despite since "
    "until till without within toward towards per via off out up down near "
    "past around across along behind beyond beside besides above below and "
    "or but nor so yet if because while whereas although though unless "
    "whether than then when where why how not never always often sometimes "
    "usually rarely seldom again still just only even also too very quite "
    "rather almost nearly already soon later earlier yesterday today tomorrow "
    "now here there else instead meanwhile moreover however therefore thus "
    "hence indeed perhaps maybe probably definitely certainly sharply "
    "slightly strongly weakly broadly widely largely mostly partly fully "
    "roughly approximately further furthermore otherwise anyway anywhere "
    "everywhere somewhere nowhere ago away back forward ahead apart aside "
    "together alone once twice thrice ever yes";

constexpr const char* kAdjectives =
    "good bad new old big small large little long short high low great major "
    "minor key main strong weak early late recent current former latest next "
    "last past future global local national international domestic foreign "
    "economic financial fiscal monetary corporate public private annual "
    "quarterly monthly weekly daily sharp steep modest slight significant "
    "substantial considerable broad narrow heavy light hard soft easy "
    "difficult tough rough smooth positive negative neutral bullish bearish "
    "volatile stable steady healthy robust solid fragile risky safe likely "
    "unlikely possible impossible certain uncertain clear unclear important "
    "notable due able unable available red black blue green white grey "
    "american british japanese european chinese german french irish wide "
    "flat mixed choppy quiet busy thin active weak strong unique common rare";

std::unordered_set<std::string> split_words(const char* text) {
  std::unordered_set<std::string> out;
  std::istringstream in(text);
  std::string word;
  while (in >> word) out.insert(word);
  return out;
}

}  // namespace

const std::unordered_map<std::string, std::string>& irregular_verb_map() {
  static const auto* kMap = [] {
    auto* m = new std::unordered_map<std::string, std::string>();
    for (const char* record : kIrregularVerbs) {
      const std::string rec(record);
      const auto colon = rec.find(':');
      const std::string base = rec.substr(0, colon);
      std::string forms = rec.substr(colon + 1);
      std::size_t pos = 0;
      while (pos != std::string::npos) {
        const auto comma = forms.find(',', pos);
        const std::string form =
            forms.substr(pos, comma == std::string::npos ? comma : comma - pos);
        (*m)[form] = base;
        pos = comma == std::string::npos ? comma : comma + 1;
      }
      (*m)[base] = base;
    }
    return m;
  }();
  return *kMap;
}

const std::unordered_map<std::string, std::string>& aux_verb_map() {
  static const auto* kMap = [] {
    auto* m = new std::unordered_map<std::string, std::string>();
    std::istringstream in(kAuxVerbs);
    std::string pair;
    while (in >> pair) {
      const auto colon = pair.find(':');
      (*m)[pair.substr(0, colon)] = pair.substr(colon + 1);
    }
    return m;
  }();
  return *kMap;
}

const std::unordered_set<std::string>& verb_lexicon() {
  static const auto* kSet = [] {
    auto* s = new std::unordered_set<std::string>(split_words(kVerbLexicon));
    for (const auto& [form, base] : irregular_verb_map()) s->insert(base);
    return s;
  }();
  return *kSet;
}

const std::unordered_set<std::string>& noun_lexicon() {
  static const auto* kSet =
      new std::unordered_set<std::string>(split_words(kNounLexicon));
  return *kSet;
}

const std::unordered_set<std::string>& determiner_words() {
  static const auto* kSet =
      new std::unordered_set<std::string>(split_words(kDeterminers));
  return *kSet;
}

const std::unordered_set<std::string>& numeral_words() {
  static const auto* kSet =
      new std::unordered_set<std::string>(split_words(kNumerals));
  return *kSet;
}

const std::unordered_set<std::string>& function_words() {
  static const auto* kSet =
      new std::unordered_set<std::string>(split_words(kFunctionWords));
  return *kSet;
}

const std::unordered_set<std::string>& adjective_words() {
  static const auto* kSet =
      new std::unordered_set<std::string>(split_words(kAdjectives));
  return *kSet;
}

bool known_lemma(const std::string& word) {
  return verb_lexicon().count(word) || noun_lexicon().count(word) ||
         determiner_words().count(word) || numeral_words().count(word) ||
         function_words().count(word) || adjective_words().count(word) ||
         aux_verb_map().count(word);
}

}  // namespace zipfsignal::lingproc::detail
