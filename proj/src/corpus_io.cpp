#include "mfc/corpus_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "mfc/errors.hpp"

namespace mfc {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

std::string require_string(const json& object, const char* key, const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end() || !it->is_string())
    throw ParseError(where + ": missing string field '" + key + "'");
  return it->get<std::string>();
}

Corpus parse_structured(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("publications") || !doc["publications"].is_array())
    throw ParseError("document must be an object with a 'publications' array");

  std::vector<Publication> publications;
  std::size_t index = 0;
  for (const auto& pub_node : doc["publications"]) {
    const std::string where = "publication #" + std::to_string(index + 1);
    if (!pub_node.is_object()) throw ParseError(where + ": not an object");
    Publication publication;
    publication.id = require_string(pub_node, "id", where);
    const auto byline_it = pub_node.find("byline");
    if (byline_it == pub_node.end() || !byline_it->is_array())
      throw ParseError(where + ": missing 'byline' array");
    for (const auto& entry_node : *byline_it) {
      if (!entry_node.is_object()) throw ParseError(where + ": byline entry is not an object");
      BylineEntry entry;
      entry.author = require_string(entry_node, "author", where);
      entry.institute = require_string(entry_node, "institute", where);
      if (const auto role_it = entry_node.find("role"); role_it != entry_node.end()) {
        if (!role_it->is_string()) throw ParseError(where + ": 'role' must be a string");
        const auto role = role_from_name(role_it->get<std::string>());
        if (!role)
          throw ValidationError("unknown role '" + role_it->get<std::string>() + "'",
                                publication.id);
        entry.role = *role;
      }
      publication.byline.push_back(std::move(entry));
    }
    publications.push_back(std::move(publication));
    ++index;
  }
  return Corpus(std::move(publications));
}

std::vector<std::string> split_fields(std::string_view line) {
  const char delimiter = line.find('\t') != std::string_view::npos ? '\t' : ',';
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    const auto piece = pos == std::string_view::npos ? line.substr(start)
                                                     : line.substr(start, pos - start);
    fields.emplace_back(trim(piece));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

Corpus parse_delimited(std::string_view text) {
  std::vector<std::string> order;                       // publication ids by first appearance
  std::map<std::string, Publication> by_id;
  long line_number = 0;
  std::size_t records = 0;

  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    ++line_number;
    if (is_blank(line) || trim(line).front() == '#') continue;
    const auto fields = split_fields(trim(line));
    if (records == 0 && fields.size() >= 3 && fields[0] == "publication_id") continue;  // header
    if (fields.size() != 3 && fields.size() != 4)
      throw ParseError("expected publication_id, author_id, institute_id[, role]",
                       line_number);
    ++records;
    const std::string& pub_id = fields[0];
    if (pub_id.empty()) throw ParseError("publication id is empty", line_number);
    auto [it, inserted] = by_id.try_emplace(pub_id);
    if (inserted) {
      it->second.id = pub_id;
      order.push_back(pub_id);
    }
    BylineEntry entry;
    entry.author = fields[1];
    entry.institute = fields[2];
    if (fields.size() == 4 && !fields[3].empty()) {
      const auto role = role_from_name(fields[3]);
      if (!role)
        throw ValidationError("unknown role '" + fields[3] + "'", pub_id, line_number);
      entry.role = *role;
    }
    it->second.byline.push_back(std::move(entry));
  }
  if (records == 0) throw ParseError("no publication records");

  std::vector<Publication> publications;
  publications.reserve(order.size());
  for (const auto& id : order) publications.push_back(std::move(by_id[id]));
  return Corpus(std::move(publications));
}

void check_delimited_id(const std::string& id, const std::string& publication_id) {
  if (id.find_first_of(",\t\r\n") != std::string::npos)
    throw ValidationError("id '" + id + "' contains a delimiter character", publication_id);
}

std::string serialize_structured(const Corpus& corpus) {
  json publications = json::array();
  for (const auto& publication : corpus.publications()) {
    json byline = json::array();
    for (const auto& entry : publication.byline) {
      json node;
      node["author"] = entry.author;
      node["institute"] = entry.institute;
      if (entry.role) node["role"] = std::string(role_name(*entry.role));
      byline.push_back(std::move(node));
    }
    json pub_node;
    pub_node["id"] = publication.id;
    pub_node["byline"] = std::move(byline);
    publications.push_back(std::move(pub_node));
  }
  json doc;
  doc["publications"] = std::move(publications);
  return doc.dump(2) + "\n";
}

std::string serialize_delimited(const Corpus& corpus) {
  std::string out = "publication_id,author_id,institute_id,role\n";
  for (const auto& publication : corpus.publications()) {
    check_delimited_id(publication.id, publication.id);
    for (const auto& entry : publication.byline) {
      check_delimited_id(entry.author, publication.id);
      check_delimited_id(entry.institute, publication.id);
      out += publication.id;
      out += ',';
      out += entry.author;
      out += ',';
      out += entry.institute;
      out += ',';
      if (entry.role) out += role_name(*entry.role);
      out += '\n';
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw IoError("cannot open '" + path + "'");
  std::ostringstream content;
  content << stream.rdbuf();
  if (stream.bad()) throw IoError("cannot read '" + path + "'");
  return content.str();
}

}  // namespace

CorpusFormat corpus_format_from_name(std::string_view name) {
  if (name == "structured") return CorpusFormat::structured;
  if (name == "delimited") return CorpusFormat::delimited;
  throw std::invalid_argument("unknown corpus format: '" + std::string(name) + "'");
}

CorpusFormat detect_corpus_format(std::string_view text) {
  for (const char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{' || c == '[' ? CorpusFormat::structured : CorpusFormat::delimited;
  }
  throw ParseError("empty corpus document");
}

Corpus parse_corpus(std::string_view text, CorpusFormat format) {
  if (is_blank(text)) throw ParseError("empty corpus document");
  return format == CorpusFormat::structured ? parse_structured(text) : parse_delimited(text);
}

Corpus parse_corpus(std::string_view text) {
  return parse_corpus(text, detect_corpus_format(text));
}

Corpus load_corpus(const std::string& path, std::optional<CorpusFormat> format) {
  const std::string text = read_file(path);
  if (format) return parse_corpus(text, *format);
  return parse_corpus(text);
}

std::string serialize_corpus(const Corpus& corpus, CorpusFormat format) {
  return format == CorpusFormat::structured ? serialize_structured(corpus)
                                            : serialize_delimited(corpus);
}

RoleWeightScheme parse_role_scheme(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("role scheme must be a JSON object");
  RoleWeightScheme scheme;
  for (const auto& [key, value] : doc.items()) {
    const auto role = role_from_name(key);
    if (!role) throw ValidationError("unknown role '" + key + "' in role scheme");
    Rational weight;
    if (value.is_number_integer()) {
      weight = Rational(value.get<long long>());
    } else if (value.is_string()) {
      try {
        weight = Rational::parse(value.get<std::string>());
      } catch (const std::exception& e) {
        throw ParseError("weight for role '" + key + "': " + e.what());
      }
    } else {
      throw ParseError("weight for role '" + key +
                       "' must be an integer or a string such as \"3/2\"");
    }
    if (!weight.is_positive())
      throw ValidationError("weight for role '" + key + "' must be positive");
    scheme.set(*role, weight);
  }
  return scheme;
}

RoleWeightScheme load_role_scheme(const std::string& path) {
  return parse_role_scheme(read_file(path));
}

}  // namespace mfc
