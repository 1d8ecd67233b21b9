// Variable contexts, monomials and multidegrees with exact integer exponents.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ferrers {

enum class errc {
    not_a_partition,
    mu_out_of_range,
    width_less_than_height,
    mu_too_small,
    isolated_vertex,
    not_shape_representable,
    not_degree_two,
    zero_ideal,
    bad_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_a_partition: return "NotAPartition";
        case errc::mu_out_of_range: return "MuOutOfRange";
        case errc::width_less_than_height: return "WidthLessThanHeight";
        case errc::mu_too_small: return "MuTooSmall";
        case errc::isolated_vertex: return "IsolatedVertex";
        case errc::not_shape_representable: return "NotShapeRepresentable";
        case errc::not_degree_two: return "NotDegreeTwo";
        case errc::zero_ideal: return "ZeroIdeal";
        case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

/**
 * An ordered list of polynomial variables.  Contexts are either mixed
 * (x_1..x_n, y_1..y_m) or pure (x_1..x_k); the x block always precedes
 * the y block.  Indices are 1-based to match the usual notation.
 */
struct VariableContext {
    int xcount = 0;
    int ycount = 0;

    static VariableContext xy(int n, int m) {
        if (n < 0 || m < 0) throw error(errc::bad_input, "negative variable count");
        return VariableContext{n, m};
    }
    static VariableContext xonly(int k) {
        if (k < 0) throw error(errc::bad_input, "negative variable count");
        return VariableContext{k, 0};
    }

    int size() const { return xcount + ycount; }
    bool mixed() const { return ycount > 0; }

    // 0-based position in the exponent vector.
    std::string name(int pos) const {
        if (pos < xcount) return "x" + std::to_string(pos + 1);
        return "y" + std::to_string(pos - xcount + 1);
    }
    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(size());
        for (int i = 0; i < size(); ++i) out.push_back(name(i));
        return out;
    }

    // Reconstructs a context from names of the form x1..xn followed by y1..ym.
    static std::optional<VariableContext> from_names(const std::vector<std::string>& names) {
        int nx = 0, ny = 0;
        for (size_t i = 0; i < names.size(); ++i) {
            const std::string& s = names[i];
            if (s.size() < 2) return std::nullopt;
            int idx = 0;
            try {
                idx = std::stoi(s.substr(1));
            } catch (...) {
                return std::nullopt;
            }
            if (s[0] == 'x') {
                if (ny > 0 || idx != nx + 1) return std::nullopt;
                ++nx;
            } else if (s[0] == 'y') {
                if (idx != ny + 1) return std::nullopt;
                ++ny;
            } else {
                return std::nullopt;
            }
        }
        return VariableContext{nx, ny};
    }

    bool operator==(const VariableContext&) const = default;
};

/**
 * A monomial as a dense exponent vector.  Also used for multidegrees,
 * where the componentwise partial order a <= b (b - a nonnegative) is
 * the divisibility order.
 */
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int v : e_)
            if (v < 0) throw error(errc::bad_input, "negative exponent");
    }
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(int nvars, int pos, int exp = 1) {
        std::vector<int> e(nvars, 0);
        e.at(pos) = exp;
        return Monomial(std::move(e));
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int operator[](int pos) const { return e_[pos]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& other) const {
        if (nvars() != other.nvars()) return false;
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    Monomial lcm(const Monomial& other) const {
        std::vector<int> r(e_);
        for (int i = 0; i < nvars(); ++i) r[i] = std::max(r[i], other.e_[i]);
        return Monomial(std::move(r));
    }

    Monomial operator*(const Monomial& other) const {
        std::vector<int> r(e_);
        for (int i = 0; i < nvars(); ++i) r[i] += other.e_[i];
        return Monomial(std::move(r));
    }

    // Exact quotient; caller guarantees divisibility of *this by other.
    Monomial quotient_by(const Monomial& other) const {
        std::vector<int> r(e_);
        for (int i = 0; i < nvars(); ++i) {
            r[i] -= other.e_[i];
            if (r[i] < 0) throw error(errc::bad_input, "quotient of non-divisible monomials");
        }
        return Monomial(std::move(r));
    }

    std::string str(const VariableContext& ctx) const {
        std::string out;
        for (int i = 0; i < nvars(); ++i) {
            if (e_[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += ctx.name(i);
            if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
        }
        return out.empty() ? "1" : out;
    }

    bool operator==(const Monomial&) const = default;
    // Container order: plain lexicographic on exponent vectors.
    bool operator<(const Monomial& other) const { return e_ < other.e_; }

private:
    std::vector<int> e_;
};

using MultiDegree = Monomial;

// Display/canonical generator order: degree first, then the row-major
// order in which a diagram lists its cells (x1-generators first).
inline bool generator_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return b.exponents() < a.exponents();
}

/**
 * A substitution sending each y_j to a target x-variable.  The default
 * is the identity assignment y_j -> x_j.
 */
struct Substitution {
    std::vector<int> target;  // 1-based x-index per y-index

    static Substitution identity(int m) {
        Substitution s;
        s.target.resize(m);
        std::iota(s.target.begin(), s.target.end(), 1);
        return s;
    }

    bool is_identity() const {
        for (size_t j = 0; j < target.size(); ++j)
            if (target[j] != static_cast<int>(j) + 1) return false;
        return true;
    }

    // Number of x-variables in the codomain, given the source context.
    int codomain_size(const VariableContext& src) const {
        int k = std::max(src.xcount, src.ycount);
        for (int t : target) k = std::max(k, t);
        return k;
    }
};

// Pushes a monomial in an x/y context through a substitution; the result
// lives in a pure-x context with target_vars variables.
inline Monomial specialize_monomial(const Monomial& mono, const VariableContext& src,
                                    const Substitution& sigma, int target_vars) {
    if (mono.nvars() != src.size()) throw error(errc::bad_input, "monomial/context size mismatch");
    if (static_cast<int>(sigma.target.size()) != src.ycount)
        throw error(errc::bad_input, "substitution does not cover all y-variables");
    std::vector<int> out(target_vars, 0);
    for (int i = 0; i < src.xcount; ++i) out.at(i) += mono[i];
    for (int j = 0; j < src.ycount; ++j) {
        int t = sigma.target[j];
        if (t < 1 || t > target_vars) throw error(errc::bad_input, "substitution target out of range");
        out.at(t - 1) += mono[src.xcount + j];
    }
    return Monomial(std::move(out));
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace ferrers
