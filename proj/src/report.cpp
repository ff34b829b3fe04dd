#include "eisen/report.hpp"

#include <sstream>

#include "eisen/text.hpp"

namespace eisen {

namespace {

Integer integer_from_json(const Json &j)
{
    return parse_natural(j.get<std::string>());
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string csv_quote(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

Json to_json(const PrimeFactorization &f)
{
    Json factors = Json::array();
    for (const auto &[prime, exp] : f.factors)
        factors.push_back({{"prime", format_eisenstein(prime)}, {"exp", exp}});
    return {{"unit", format_eisenstein(f.unit)}, {"factors", std::move(factors)}};
}

PrimeFactorization factorization_from_json(const Json &j)
{
    PrimeFactorization f;
    f.unit = parse_eisenstein(j.at("unit").get<std::string>());
    for (const auto &e : j.at("factors"))
        f.factors.push_back({parse_eisenstein(e.at("prime").get<std::string>()),
                             e.at("exp").get<unsigned long>()});
    return f;
}

Json to_json(const DivisorReport &r)
{
    return {{"subject", format_eisenstein(r.subject)},
            {"sigma_star", format_eisenstein(r.sigma_star)},
            {"norm_subject", r.norm_subject.get_str()},
            {"norm_sigma", r.norm_sigma.get_str()},
            {"perfect", r.is_perfect},
            {"norm_perfect", r.is_norm_perfect}};
}

DivisorReport divisor_report_from_json(const Json &j)
{
    DivisorReport r;
    r.subject = parse_eisenstein(j.at("subject").get<std::string>());
    r.sigma_star = parse_eisenstein(j.at("sigma_star").get<std::string>());
    r.norm_subject = integer_from_json(j.at("norm_subject"));
    r.norm_sigma = integer_from_json(j.at("norm_sigma"));
    r.is_perfect = j.at("perfect").get<bool>();
    r.is_norm_perfect = j.at("norm_perfect").get<bool>();
    return r;
}

Json to_json(const MersenneRecord &r)
{
    return {{"p", r.p},
            {"value", format_eisenstein(r.value)},
            {"norm", r.norm.get_str()},
            {"prime", r.prime},
            {"p_mod_12", r.p_mod_12},
            {"in_region", r.in_region}};
}

MersenneRecord mersenne_record_from_json(const Json &j)
{
    MersenneRecord r;
    r.p = j.at("p").get<unsigned long>();
    r.value = parse_eisenstein(j.at("value").get<std::string>());
    r.norm = integer_from_json(j.at("norm"));
    r.prime = j.at("prime").get<bool>();
    r.p_mod_12 = j.at("p_mod_12").get<unsigned>();
    r.in_region = j.at("in_region").get<bool>();
    return r;
}

Json to_json(const ReportRecord &r)
{
    Json j;
    j["subject"] = r.subject;
    if (r.skipped) {
        j["skipped"] = *r.skipped;
        return j;
    }
    Json verdicts = Json::object();
    for (const auto &[k, v] : r.verdicts)
        verdicts[k] = v;
    j["verdicts"] = std::move(verdicts);
    if (r.factorization)
        j["factorization"] = to_json(*r.factorization);
    Json norms = Json::object();
    for (const auto &[k, v] : r.norms)
        norms[k] = v;
    j["norms"] = std::move(norms);
    if (r.sigma_star)
        j["sigma_star"] = *r.sigma_star;
    return j;
}

ReportRecord report_record_from_json(const Json &j)
{
    ReportRecord r;
    r.subject = j.at("subject").get<std::string>();
    if (j.contains("skipped")) {
        r.skipped = j.at("skipped").get<std::string>();
        return r;
    }
    for (const auto &[k, v] : j.at("verdicts").items())
        r.verdicts[k] = v.get<bool>();
    if (j.contains("factorization"))
        r.factorization = factorization_from_json(j.at("factorization"));
    for (const auto &[k, v] : j.at("norms").items())
        r.norms[k] = v.get<std::string>();
    if (j.contains("sigma_star"))
        r.sigma_star = j.at("sigma_star").get<std::string>();
    return r;
}

ReportRecord make_report_record(const PrimeFactorization &f, const DivisorReport &r)
{
    ReportRecord out;
    out.subject = format_eisenstein(r.subject);
    out.verdicts = {{"even", is_even(r.subject)},
                    {"perfect", r.is_perfect},
                    {"norm_perfect", r.is_norm_perfect}};
    out.factorization = f;
    out.norms = {{"subject", r.norm_subject.get_str()}, {"sigma_star", r.norm_sigma.get_str()}};
    out.sigma_star = format_eisenstein(r.sigma_star);
    return out;
}

ReportRecord make_skipped_record(const EisensteinInt &x, const std::string &reason)
{
    ReportRecord out;
    out.subject = format_eisenstein(x);
    out.skipped = reason;
    return out;
}

std::string csv_header_mersenne()
{
    return "p,value,norm,prime,p_mod_12,in_region";
}

std::string to_csv(const MersenneRecord &r)
{
    std::ostringstream os;
    os << r.p << ',' << format_eisenstein(r.value) << ',' << r.norm.get_str() << ','
       << bool_str(r.prime) << ',' << r.p_mod_12 << ',' << bool_str(r.in_region);
    return os.str();
}

std::string csv_header_report()
{
    return "subject,norm_subject,sigma_star,norm_sigma,even,perfect,norm_perfect,factorization,skipped";
}

std::string to_csv(const ReportRecord &r)
{
    auto verdict = [&](const char *key) {
        auto it = r.verdicts.find(key);
        return it == r.verdicts.end() ? std::string() : bool_str(it->second);
    };
    auto norm_of = [&](const char *key) {
        auto it = r.norms.find(key);
        return it == r.norms.end() ? std::string() : it->second;
    };
    std::ostringstream os;
    os << csv_quote(r.subject) << ',' << norm_of("subject") << ',' << csv_quote(r.sigma_star.value_or(""))
       << ',' << norm_of("sigma_star") << ',' << verdict("even") << ',' << verdict("perfect") << ','
       << verdict("norm_perfect") << ','
       << csv_quote(r.factorization ? format_factorization(*r.factorization) : "") << ','
       << csv_quote(r.skipped.value_or(""));
    return os.str();
}

std::string format_factorization(const PrimeFactorization &f)
{
    std::string out;
    auto append = [&](const std::string &term) {
        if (!out.empty())
            out += " * ";
        out += term;
    };
    if (f.unit != units::one || f.factors.empty())
        append(f.factors.empty() ? format_eisenstein(f.unit) : "(" + format_eisenstein(f.unit) + ")");
    for (const auto &[prime, exp] : f.factors) {
        std::string p = format_eisenstein(prime);
        if (sgn(prime.b) != 0)
            p = "(" + p + ")";
        append(exp == 1 ? p : p + "^" + std::to_string(exp));
    }
    return out;
}

} // namespace eisen
