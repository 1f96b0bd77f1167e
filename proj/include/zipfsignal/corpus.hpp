#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zipfsignal/date.hpp"

namespace zipfsignal::corpus {

// One dated, deduplicated plain-text news item. `body` is markup-free,
// entity-decoded, whitespace-collapsed UTF-8 for kPlain articles; for kVert
// articles it holds pre-tagged vertical text (surface TAB lemma TAB tag,
// blank line = sentence break) passed through from an external tagger.
struct Article {
  enum class Format { kPlain, kVert };

  std::string id;
  std::string source;
  std::string url;
  Date published_at;
  std::string title;
  std::string body;
  Format format = Format::kPlain;
};

struct ArticleMeta {
  std::string id;
  std::string source;
  std::string url;
  Date date;
  std::string title;
};

struct DateRange {
  Date from;
  Date to;  // inclusive

  bool contains(const Date& d) const { return from <= d && d <= to; }
};

// Strips markup, decodes character entities (repeatedly, so double-encoded
// text like "&amp;amp;" ends up as "&"), collapses whitespace runs to single
// spaces and trims. Throws DataError on undecodable (non-UTF-8) input.
std::string normalize_text(std::string_view raw);

// Builds a normalized Article. For kVert the body is validated as vertical
// format and preserved line for line instead of being flattened.
// Throws DataError when the body is empty after normalization, is not valid
// UTF-8, or (when `range` is given) the date falls outside the range.
Article ingest_article(std::string_view raw, const ArticleMeta& meta,
                       Article::Format format = Article::Format::kPlain,
                       const std::optional<DateRange>& range = std::nullopt);

// First 50 Unicode scalar values of the body (the whole body when shorter).
std::string dedup_key(const Article& a);

// Line-delimited article store: one JSON object per line, append-only.
// The dedup index is rebuilt from the file on open. Reads are const and
// shareable across threads; writes serialize through an internal mutex.
class ArticleStore {
 public:
  ArticleStore() = default;  // in-memory store, not file-backed

  // Opens (or, when writable, creates) a store file.
  static ArticleStore open(const std::filesystem::path& path, bool writable);

  // Inserts `a` unless an existing article shares its dedup key; returns
  // whether it was inserted. Throws DataError on duplicate id or I/O failure.
  bool put(const Article& a);

  const std::vector<Article>& articles() const { return articles_; }
  const Article* find_id(std::string_view id) const;
  std::size_t size() const { return articles_.size(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  void index_and_append_in_memory(const Article& a);

  std::filesystem::path path_;
  bool writable_ = false;
  std::vector<Article> articles_;
  std::unordered_map<std::string, std::size_t> by_key_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::unique_ptr<std::mutex> write_mutex_ = std::make_unique<std::mutex>();
};

// Partitions in-range articles by the ISO week of published_at. Every week
// from the range's first to its last ISO week is present, empty bins
// included, so downstream series get a contiguous week axis.
std::map<WeekId, std::vector<std::string>> bin_by_week(const ArticleStore& store,
                                                       const DateRange& range);

}  // namespace zipfsignal::corpus
