#include "zipfsignal/corpus.hpp"

#include <fstream>

#include "json.hpp"
#include "zipfsignal/errors.hpp"
#include "zipfsignal/utf8.hpp"

namespace zipfsignal::corpus {

namespace {

// Validates vertical (pre-tagged) text: every non-blank line must carry
// surface TAB lemma TAB fine_tag with non-empty surface and lemma. Line
// endings are normalized and trailing blank lines trimmed.
std::string normalize_vertical(std::string_view raw) {
  std::size_t bad = 0;
  if (!utf8::validate(raw, &bad)) {
    throw DataError("cannot decode article text: invalid UTF-8 at byte " +
                    std::to_string(bad));
  }
  std::string out;
  out.reserve(raw.size());
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool any_token = false;
  while (pos <= raw.size()) {
    const auto nl = raw.find('\n', pos);
    std::string_view line = raw.substr(
        pos, nl == std::string_view::npos ? raw.size() - pos : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (!line.empty()) {
      const auto t1 = line.find('\t');
      const auto t2 = t1 == std::string_view::npos ? std::string_view::npos
                                                   : line.find('\t', t1 + 1);
      if (t1 == std::string_view::npos || t2 == std::string_view::npos ||
          line.find('\t', t2 + 1) != std::string_view::npos || t1 == 0 ||
          t2 == t1 + 1) {
        throw DataError("malformed pre-tagged line " + std::to_string(line_no) +
                        ": expected surface<TAB>lemma<TAB>tag");
      }
      any_token = true;
    }
    out.append(line);
    out.push_back('\n');
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  while (out.size() >= 2 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n') {
    out.pop_back();
  }
  if (!any_token) return "";
  return out;
}

Article::Format parse_format(const std::string& s) {
  if (s.empty() || s == "plain") return Article::Format::kPlain;
  if (s == "vert") return Article::Format::kVert;
  throw DataError("unknown article format: '" + s + "'");
}

nlohmann::json to_json(const Article& a) {
  nlohmann::json j{{"id", a.id},
                   {"source", a.source},
                   {"url", a.url},
                   {"published_at", a.published_at.to_string()},
                   {"title", a.title},
                   {"body", a.body}};
  if (a.format == Article::Format::kVert) j["format"] = "vert";
  return j;
}

Article from_json(const nlohmann::json& j, std::size_t line_no) {
  try {
    Article a;
    a.id = j.at("id").get<std::string>();
    a.source = j.at("source").get<std::string>();
    a.url = j.at("url").get<std::string>();
    a.published_at = Date::parse(j.at("published_at").get<std::string>());
    a.title = j.at("title").get<std::string>();
    a.body = j.at("body").get<std::string>();
    a.format = parse_format(j.value("format", "plain"));
    if (a.body.empty()) throw DataError("empty body");
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("store record at line " + std::to_string(line_no) + ": " +
                    e.what());
  }
}

}  // namespace

Article ingest_article(std::string_view raw, const ArticleMeta& meta,
                       Article::Format format,
                       const std::optional<DateRange>& range) {
  if (!meta.date.valid()) {
    throw DataError("article '" + meta.id + "': invalid date");
  }
  if (range && !range->contains(meta.date)) {
    throw DataError("article '" + meta.id + "' dated " + meta.date.to_string() +
                    " falls outside the corpus range " + range->from.to_string() +
                    ".." + range->to.to_string());
  }
  Article a;
  a.id = meta.id;
  a.source = meta.source;
  a.url = meta.url;
  a.published_at = meta.date;
  a.title = meta.title;
  a.format = format;
  a.body = format == Article::Format::kVert ? normalize_vertical(raw)
                                            : normalize_text(raw);
  if (a.body.empty()) {
    throw DataError("article '" + meta.id + "': empty body after normalization");
  }
  return a;
}

std::string dedup_key(const Article& a) {
  return std::string(utf8::prefix_scalars(a.body, 50));
}

ArticleStore ArticleStore::open(const std::filesystem::path& path, bool writable) {
  ArticleStore store;
  store.path_ = path;
  store.writable_ = writable;
  std::ifstream in(path);
  if (!in) {
    if (!writable) throw DataError("cannot open store: " + path.string());
    std::ofstream create(path, std::ios::app);
    if (!create) throw DataError("cannot create store: " + path.string());
    return store;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw DataError("store record at line " + std::to_string(line_no) +
                      ": invalid JSON");
    }
    Article a = from_json(j, line_no);
    const std::string key = dedup_key(a);
    if (store.by_key_.count(key) || store.by_id_.count(a.id)) {
      // Tolerate records duplicated by external edits; first one wins.
      continue;
    }
    store.index_and_append_in_memory(a);
  }
  return store;
}

void ArticleStore::index_and_append_in_memory(const Article& a) {
  by_key_.emplace(dedup_key(a), articles_.size());
  by_id_.emplace(a.id, articles_.size());
  articles_.push_back(a);
}

bool ArticleStore::put(const Article& a) {
  if (a.body.empty()) throw DataError("article '" + a.id + "': empty body");
  std::lock_guard<std::mutex> lock(*write_mutex_);
  if (by_key_.count(dedup_key(a))) return false;
  if (by_id_.count(a.id)) {
    throw DataError("duplicate article id: '" + a.id + "'");
  }
  if (!path_.empty()) {
    if (!writable_) throw DataError("store not open for writing: " + path_.string());
    std::ofstream out(path_, std::ios::app);
    if (!out) throw DataError("cannot append to store: " + path_.string());
    out << to_json(a).dump() << '\n';
    out.flush();
    if (!out) throw DataError("I/O failure writing store: " + path_.string());
  }
  index_and_append_in_memory(a);
  return true;
}

const Article* ArticleStore::find_id(std::string_view id) const {
  const auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &articles_[it->second];
}

std::map<WeekId, std::vector<std::string>> bin_by_week(const ArticleStore& store,
                                                       const DateRange& range) {
  if (range.to < range.from) throw DataError("empty date range");
  std::map<WeekId, std::vector<std::string>> bins;
  const WeekId last = WeekId::of(range.to);
  for (WeekId w = WeekId::of(range.from); w <= last; w = w.next()) {
    bins.emplace(w, std::vector<std::string>{});
  }
  for (const Article& a : store.articles()) {
    if (!range.contains(a.published_at)) continue;
    bins[WeekId::of(a.published_at)].push_back(a.id);
  }
  return bins;
}

}  // namespace zipfsignal::corpus
