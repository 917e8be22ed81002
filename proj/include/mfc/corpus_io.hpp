#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mfc/corpus.hpp"
#include "mfc/institute_score.hpp"

namespace mfc {

// structured: self-describing JSON document (canonical format).
// delimited:  one byline entry per line, publication_id,author_id,
//             institute_id[,role], comma or tab separated, '#' comments.
enum class CorpusFormat { structured, delimited };

CorpusFormat corpus_format_from_name(std::string_view name);
CorpusFormat detect_corpus_format(std::string_view text);

Corpus parse_corpus(std::string_view text, CorpusFormat format);
Corpus parse_corpus(std::string_view text);  // auto-detect
Corpus load_corpus(const std::string& path, std::optional<CorpusFormat> format = {});

std::string serialize_corpus(const Corpus& corpus, CorpusFormat format);

// JSON object mapping role names to positive weights. Weights may be given
// as integers or as strings holding an integer, fraction or decimal
// ("3", "3/2", "1.5"); roles not mentioned keep weight 1.
RoleWeightScheme parse_role_scheme(std::string_view text);
RoleWeightScheme load_role_scheme(const std::string& path);

}  // namespace mfc
