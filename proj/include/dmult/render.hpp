#pragma once

#include <string>
#include <vector>

#include "dmult/verify.hpp"

namespace dmult {

enum class Format { Json, Csv, Text };

// Throws ParseError for anything other than json, csv or text.
Format parse_format(const std::string& s);

// Terms are listed by decreasing l(w_mu), then coordinates: the reverse of a
// linear extension of the Bruhat order, so lambda comes first.
std::vector<Weight> display_order(const AffineWeylGroup& group, std::vector<Weight> support);

std::string render_character(const AffineWeylGroup& group, const CharSeries& chi, Format f);
std::string render_e_qt(const AffineWeylGroup& group, const Weight& lambda, const RatSeries& e, Format f);
std::string render_e_t(const AffineWeylGroup& group, const Weight& lambda, const LaurentSeries& e, Format f);
std::string render_predictions(const std::string& type, const std::vector<PredictionRecord>& recs, Format f);
std::string render_verify(const VerifyReport& rep, Format f);

}  // namespace dmult
