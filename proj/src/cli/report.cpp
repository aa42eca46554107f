#include <charconv>
#include <cmath>

#include "hankel/cli.hpp"
#include "hankel/errors.hpp"

namespace hankel::cli {

namespace {

bool as_integer(const std::string& s, long long& out) {
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end && !s.empty();
}

}  // namespace

Json field_json(const Field& f) {
    Json j;
    j["p"] = f.characteristic();
    j["d"] = f.degree();
    j["modulus"] = f.modulus();
    j["order"] = f.order();
    return j;
}

Json params_json(const ParamList& params) {
    Json j = Json::object();
    for (const auto& [key, value] : params) {
        long long v = 0;
        if (as_integer(value, v)) {
            j[key] = v;
        } else {
            j[key] = value;
        }
    }
    return j;
}

Json estimate_json(const McEstimate& e) {
    Json j;
    j["hits"] = e.hits;
    j["trials"] = e.trials;
    j["estimate"] = e.estimate;
    j["stderr"] = e.stderr_;
    if (e.target) {
        j["target"] = *e.target;
        const double z = *e.z_score();
        j["z"] = std::isfinite(z) ? Json(z) : Json(nullptr);
    } else {
        j["target"] = nullptr;
        j["z"] = nullptr;
    }
    return j;
}

Json report_json(const CensusReport& r, bool timing) {
    Json j;
    j["suite"] = r.suite;
    j["family"] = r.family;
    j["field"] = r.field.spec_string();
    j["params"] = params_json(r.params);
    j["mode"] = to_string(r.mode);
    j["formula"] = r.formula ? Json(r.formula->str()) : Json(nullptr);
    if (r.estimate) {
        j["observed"] = estimate_json(*r.estimate);
    } else {
        j["observed"] = r.observed ? Json(r.observed->str()) : Json(nullptr);
    }
    j["instances"] = r.instances;
    j["violations"] = r.violations;
    if (!r.first_failure.empty()) {
        j["first_failure"] = r.first_failure;
    }
    j["verdict"] = to_string(r.verdict);
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    if (timing) {
        j["elapsed_ms"] = r.elapsed_ms;
    }
    return j;
}

std::string params_text(const ParamList& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) {
            out += ' ';
        }
        out += key + "=" + value;
    }
    return out;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) {
        return cell;
    }
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::vector<Field> parse_field_list(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t stop = comma == std::string::npos ? text.size() : comma;
        tokens.push_back(text.substr(start, stop - start));
        start = stop + 1;
    }
    std::vector<Field> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::string spec = tokens[i];
        const auto colon = spec.find(':');
        if (colon != std::string::npos) {
            // p^d:c0 was the first coefficient; d more follow.
            const auto caret = spec.find('^');
            long long d = 0;
            if (caret == std::string::npos || caret > colon ||
                !as_integer(spec.substr(caret + 1, colon - caret - 1), d) || d < 1) {
                throw UsageError("bad field spec '" + spec + "'");
            }
            for (long long c = 0; c < d; ++c) {
                if (++i >= tokens.size()) {
                    throw UsageError("field spec '" + tokens[i - 1] + "' is missing coefficients");
                }
                spec += "," + tokens[i];
            }
        }
        if (spec.empty()) {
            throw UsageError("empty entry in field list '" + text + "'");
        }
        out.push_back(Field::parse(spec));
    }
    return out;
}

}  // namespace hankel::cli
