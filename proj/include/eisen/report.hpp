#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "eisen/divisor.hpp"
#include "eisen/factorization.hpp"
#include "eisen/mersenne.hpp"

namespace eisen {

using Json = nlohmann::ordered_json;

// Big integers are always serialized as decimal strings.

Json to_json(const PrimeFactorization &f);
PrimeFactorization factorization_from_json(const Json &j);

Json to_json(const DivisorReport &r);
DivisorReport divisor_report_from_json(const Json &j);

Json to_json(const MersenneRecord &r);
MersenneRecord mersenne_record_from_json(const Json &j);

/// One output row of a search. A row either carries verdicts or, when the
/// candidate could not be evaluated, a skip reason.
struct ReportRecord {
    std::string subject;
    std::map<std::string, bool> verdicts;
    std::optional<PrimeFactorization> factorization;
    std::map<std::string, std::string> norms;
    std::optional<std::string> sigma_star;
    std::optional<std::string> skipped;

    friend bool operator==(const ReportRecord &, const ReportRecord &) = default;
};

Json to_json(const ReportRecord &r);
ReportRecord report_record_from_json(const Json &j);

/// Row for a fully evaluated candidate.
ReportRecord make_report_record(const PrimeFactorization &f, const DivisorReport &r);

/// Row for a candidate whose factorization was abandoned.
ReportRecord make_skipped_record(const EisensteinInt &x, const std::string &reason);

std::string csv_header_mersenne();
std::string to_csv(const MersenneRecord &r);

std::string csv_header_report();
std::string to_csv(const ReportRecord &r);

/// "(1+w) * (1-w)^2" style product; "1" for an empty product with unit 1.
std::string format_factorization(const PrimeFactorization &f);

} // namespace eisen
