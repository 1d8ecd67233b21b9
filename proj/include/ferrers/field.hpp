// Coefficient fields for homology computations: GF(p) or the rationals.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ferrers/monomial.hpp"

namespace ferrers {

struct Field {
    bool is_rational = false;
    long long p = 2;

    static Field gf(long long prime) {
        if (prime < 2) throw error(errc::bad_input, "field characteristic must be a prime >= 2");
        for (long long d = 2; d * d <= prime; ++d)
            if (prime % d == 0) throw error(errc::bad_input, "field characteristic must be prime");
        return Field{false, prime};
    }
    static Field rationals() { return Field{true, 0}; }

    std::string str() const { return is_rational ? "Q" : "GF(" + std::to_string(p) + ")"; }

    static std::optional<Field> parse(const std::string& s) {
        if (s == "Q" || s == "q" || s == "0") return rationals();
        try {
            long long p = std::stoll(s);
            return gf(p);
        } catch (...) {
            return std::nullopt;
        }
    }

    bool operator==(const Field&) const = default;
};

inline std::vector<Field> default_fields() {
    const char* env = std::getenv("FERRERS_DEFAULT_FIELDS");
    if (env != nullptr && *env != '\0') {
        std::vector<Field> out;
        std::string s(env);
        size_t start = 0;
        while (start <= s.size()) {
            size_t comma = s.find(',', start);
            std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
            if (!tok.empty()) {
                auto f = Field::parse(tok);
                if (!f) throw error(errc::bad_input, "FERRERS_DEFAULT_FIELDS: bad field '" + tok + "'");
                out.push_back(*f);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!out.empty()) return out;
    }
    return {Field::gf(2), Field::gf(32003)};
}

}  // namespace ferrers
