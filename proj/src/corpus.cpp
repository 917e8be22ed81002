#include "mfc/corpus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mfc/errors.hpp"

namespace mfc {

std::string_view role_name(Role role) {
  switch (role) {
    case Role::first: return "first";
    case Role::second: return "second";
    case Role::middle: return "middle";
    case Role::corresponding: return "corresponding";
  }
  return "middle";
}

std::optional<Role> role_from_name(std::string_view name) {
  if (name == "first") return Role::first;
  if (name == "second") return Role::second;
  if (name == "middle") return Role::middle;
  if (name == "corresponding") return Role::corresponding;
  return std::nullopt;
}

Role effective_role(const Publication& publication, std::size_t position) {
  const auto& byline = publication.byline;
  if (position >= byline.size()) throw std::domain_error("byline position out of range");
  if (byline[position].role) return *byline[position].role;
  const std::size_t n = byline.size();
  if (position == 0) return Role::first;
  if (position == n - 1) return Role::corresponding;
  if (position == 1) return Role::second;
  return Role::middle;
}

std::size_t mention_count(const Publication& publication, std::string_view institute) {
  std::size_t count = 0;
  for (const auto& entry : publication.byline)
    if (entry.institute == institute) ++count;
  return count;
}

std::size_t institute_count(const Publication& publication) {
  std::set<std::string_view> distinct;
  for (const auto& entry : publication.byline) distinct.insert(entry.institute);
  return distinct.size();
}

void validate_publication(const Publication& publication) {
  if (publication.id.empty()) throw ValidationError("publication id is empty");
  if (publication.byline.empty())
    throw ValidationError("byline is empty", publication.id);
  std::set<std::string_view> seen;
  for (const auto& entry : publication.byline) {
    if (entry.author.empty())
      throw ValidationError("author id is empty", publication.id);
    if (entry.institute.empty())
      throw ValidationError("institute id is empty for author '" + entry.author + "'",
                            publication.id);
    if (!seen.insert(entry.author).second)
      throw ValidationError("author '" + entry.author + "' appears twice in the byline",
                            publication.id);
  }
}

Publication replicate(const Publication& publication, unsigned copies) {
  if (copies == 0) throw std::domain_error("replication factor must be >= 1");
  validate_publication(publication);
  if (copies == 1) return publication;
  Publication out;
  out.id = publication.id;
  out.byline.reserve(publication.byline.size() * copies);
  for (const auto& entry : publication.byline) {
    for (unsigned c = 1; c <= copies; ++c) {
      BylineEntry copy = entry;
      copy.author = entry.author + "." + std::to_string(c);
      out.byline.push_back(std::move(copy));
    }
  }
  return out;
}

Corpus::Corpus(std::vector<Publication> publications)
    : publications_(std::move(publications)) {
  for (const auto& publication : publications_) validate_publication(publication);
  std::sort(publications_.begin(), publications_.end(),
            [](const Publication& a, const Publication& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < publications_.size(); ++i)
    if (publications_[i - 1].id == publications_[i].id)
      throw ValidationError("duplicate publication id", publications_[i].id);
}

bool Corpus::has_institute(std::string_view institute) const {
  for (const auto& publication : publications_)
    for (const auto& entry : publication.byline)
      if (entry.institute == institute) return true;
  return false;
}

std::vector<std::string> Corpus::institutes() const {
  std::set<std::string> distinct;
  for (const auto& publication : publications_)
    for (const auto& entry : publication.byline) distinct.insert(entry.institute);
  return {distinct.begin(), distinct.end()};
}

std::vector<std::string> Corpus::authors() const {
  std::set<std::string> distinct;
  for (const auto& publication : publications_)
    for (const auto& entry : publication.byline) distinct.insert(entry.author);
  return {distinct.begin(), distinct.end()};
}

}  // namespace mfc
