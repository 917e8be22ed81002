#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mfc {

enum class Role { first, second, middle, corresponding };

std::string_view role_name(Role role);
std::optional<Role> role_from_name(std::string_view name);

struct BylineEntry {
  std::string author;
  std::string institute;
  // Explicit role tag; when absent the positional rule of effective_role
  // applies.
  std::optional<Role> role;

  bool operator==(const BylineEntry&) const = default;
};

struct Publication {
  std::string id;
  std::vector<BylineEntry> byline;  // ordered as printed

  bool operator==(const Publication&) const = default;
};

// Explicit tag if present, otherwise derived from byline position: the first
// listed author is "first", the last is "corresponding", position two is
// "second" when the byline has three or more entries, and everyone else is
// "middle".
Role effective_role(const Publication& publication, std::size_t position);

// Number of byline entries affiliated with the institute (Y for this
// publication).
std::size_t mention_count(const Publication& publication, std::string_view institute);

// Number of distinct institutes in the byline (M).
std::size_t institute_count(const Publication& publication);

// Throws ValidationError on an empty byline, empty ids, or a duplicated
// author within the byline.
void validate_publication(const Publication& publication);

// Publication in which every entity participates `copies` times as often:
// each byline entry is replaced by `copies` entries with fresh author ids
// and the same institute. copies = 1 returns the input unchanged.
Publication replicate(const Publication& publication, unsigned copies);

// Immutable set of publications, canonically ordered by publication id.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Publication> publications);

  const std::vector<Publication>& publications() const { return publications_; }
  std::size_t size() const { return publications_.size(); }
  bool empty() const { return publications_.empty(); }

  bool has_institute(std::string_view institute) const;
  std::vector<std::string> institutes() const;  // sorted, distinct
  std::vector<std::string> authors() const;     // sorted, distinct

  bool operator==(const Corpus&) const = default;

 private:
  std::vector<Publication> publications_;
};

}  // namespace mfc
