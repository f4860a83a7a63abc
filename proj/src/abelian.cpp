#include "statesum/abelian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "statesum/errors.hpp"

namespace statesum {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// g = gcd(a,b) along with x,y with a·x + b·y = g.
Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? Int(-a) : a;
    }
    Int x1, y1;
    Int g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int x, y;
    Int g = egcd(a, m, x, y);
    if (g != 1) throw PreconditionError("mod_inverse of non-unit");
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

std::map<Int, std::vector<unsigned>> prime_power_buckets(const std::vector<Int>& factors) {
    std::map<Int, std::vector<unsigned>> buckets;
    for (Int f : factors) {
        if (f <= 0) throw MalformedInputError("abelian factor must be positive");
        if (f == 1) continue;
        for (Int p = 2; p * p <= f; ++p) {
            if (f % p == 0) {
                unsigned e = 0;
                while (f % p == 0) {
                    f /= p;
                    ++e;
                }
                buckets[p].push_back(e);
            }
        }
        if (f > 1) buckets[f].push_back(1);
    }
    return buckets;
}

}  // namespace

Rational mod1(const Rational& q) {
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    return q - Rational(floor_div(num, den));
}

FinAbelianGroup FinAbelianGroup::from_factors(const std::vector<Int>& factors, int free_rank) {
    if (free_rank < 0) throw PreconditionError("negative free rank");
    auto buckets = prime_power_buckets(factors);
    std::size_t len = 0;
    for (auto& [p, exps] : buckets) {
        (void)p;
        std::sort(exps.begin(), exps.end(), std::greater<>());
        len = std::max(len, exps.size());
    }
    std::vector<Int> chain(len, Int(1));
    for (const auto& [p, exps] : buckets) {
        for (std::size_t i = 0; i < exps.size(); ++i) {
            Int pe = 1;
            for (unsigned t = 0; t < exps[i]; ++t) pe *= p;
            chain[len - 1 - i] *= pe;
        }
    }
    FinAbelianGroup g;
    g.factors_ = std::move(chain);
    g.free_rank_ = free_rank;
    return g;
}

Int FinAbelianGroup::order() const {
    if (free_rank_ > 0) throw PreconditionError("order of an infinite group");
    Int n = 1;
    for (const Int& d : factors_) n *= d;
    return n;
}

std::string FinAbelianGroup::describe() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank_ == 1) {
        out << "Z";
        first = false;
    } else if (free_rank_ > 1) {
        out << "Z^" << free_rank_;
        first = false;
    }
    for (const Int& d : factors_) {
        if (!first) out << " + ";
        out << "Z/" << d;
        first = false;
    }
    return out.str();
}

Int count_abelian_homs(const FinAbelianGroup& a, const FinAbelianGroup& h) {
    if (!h.is_finite()) throw UnsupportedError("hom target must be finite");
    using boost::multiprecision::gcd;
    Int total = 1;
    Int horder = h.order();
    for (int i = 0; i < a.free_rank(); ++i) total *= horder;
    for (const Int& d : a.factors()) {
        for (const Int& e : h.factors()) total *= gcd(d, e);
    }
    return total;
}

CoeffGroup CoeffGroup::qmodz() {
    CoeffGroup g;
    g.moduli_ = {Int(0)};
    return g;
}

CoeffGroup CoeffGroup::from_group(const FinAbelianGroup& h) {
    if (!h.is_finite()) throw UnsupportedError("coefficient group must be finite or Q/Z");
    CoeffGroup g;
    g.moduli_ = h.factors();
    return g;
}

CoeffGroup CoeffGroup::from_moduli(std::vector<Int> moduli) {
    for (const Int& m : moduli) {
        if (m < 0) throw MalformedInputError("negative modulus in coefficient group");
    }
    CoeffGroup g;
    g.moduli_ = std::move(moduli);
    return g;
}

bool CoeffGroup::is_finite() const {
    for (const Int& m : moduli_) {
        if (m == 0) return false;
    }
    return true;
}

Int CoeffGroup::order() const {
    if (!is_finite()) throw PreconditionError("order of an infinite coefficient group");
    Int n = 1;
    for (const Int& m : moduli_) n *= m;
    return n;
}

bool CoeffGroup::is_zero(const AbValue& v) const {
    for (const Rational& q : v) {
        if (q != 0) return false;
    }
    return true;
}

AbValue CoeffGroup::reduce(AbValue v) const {
    if (v.size() != moduli_.size()) {
        throw MalformedInputError("abelian value has wrong number of components");
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = mod1(v[i]);
        if (moduli_[i] != 0) {
            Int den = boost::multiprecision::denominator(v[i]);
            if (moduli_[i] % den != 0) {
                throw MalformedInputError("value " + rational_to_string(v[i]) +
                                          " is not in Z/" + moduli_[i].str());
            }
        }
    }
    return v;
}

AbValue CoeffGroup::add(const AbValue& a, const AbValue& b) const {
    if (a.size() != moduli_.size() || b.size() != moduli_.size()) {
        throw MalformedInputError("abelian value has wrong number of components");
    }
    AbValue out(moduli_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod1(a[i] + b[i]);
    return out;
}

AbValue CoeffGroup::sub(const AbValue& a, const AbValue& b) const { return add(a, negate(b)); }

AbValue CoeffGroup::negate(const AbValue& a) const {
    if (a.size() != moduli_.size()) {
        throw MalformedInputError("abelian value has wrong number of components");
    }
    AbValue out(moduli_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod1(-a[i]);
    return out;
}

AbValue CoeffGroup::scale(const Int& n, const AbValue& a) const {
    if (a.size() != moduli_.size()) {
        throw MalformedInputError("abelian value has wrong number of components");
    }
    AbValue out(moduli_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod1(Rational(n) * a[i]);
    return out;
}

bool CoeffGroup::try_solve_scale(const Int& d, const AbValue& c, AbValue* out) const {
    if (c.size() != moduli_.size()) {
        throw MalformedInputError("abelian value has wrong number of components");
    }
    Int dd = d < 0 ? Int(-d) : d;
    AbValue rhs = d < 0 ? negate(c) : c;
    AbValue x(moduli_.size(), Rational(0));
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const Int& m = moduli_[i];
        if (dd == 0) {
            if (rhs[i] != 0) return false;
            continue;
        }
        if (m == 0) {
            x[i] = mod1(rhs[i] / Rational(dd));
            continue;
        }
        // rhs[i] = a/m with 0 <= a < m; solve dd·t ≡ a (mod m).
        Int a = boost::multiprecision::numerator(Rational(rhs[i]) * Rational(m));
        Int g = boost::multiprecision::gcd(dd, m);
        if (a % g != 0) return false;
        Int m2 = m / g;
        if (m2 == 1) {
            x[i] = 0;
            continue;
        }
        Int t = ((a / g) % m2) * mod_inverse((dd / g) % m2, m2) % m2;
        if (t < 0) t += m2;
        x[i] = Rational(t, m);
    }
    if (out) *out = std::move(x);
    return true;
}

std::vector<AbValue> CoeffGroup::elements() const {
    if (!is_finite()) throw PreconditionError("cannot enumerate an infinite coefficient group");
    std::vector<AbValue> all;
    AbValue cur = zero();
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == moduli_.size()) {
            all.push_back(cur);
            return;
        }
        for (Int a = 0; a < moduli_[i]; ++a) {
            cur[i] = Rational(a, moduli_[i]);
            rec(i + 1);
        }
    };
    rec(0);
    return all;
}

std::string CoeffGroup::describe() const {
    if (moduli_.empty()) return "abelian:1";
    if (is_pure_qmodz()) return "u1";
    std::ostringstream out;
    out << (moduli_.size() == 1 ? "cyclic:" : "abelian:");
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (i) out << ",";
        if (moduli_[i] == 0) throw UnsupportedError("mixed coefficient groups are not supported");
        out << moduli_[i];
    }
    return out.str();
}

CoeffGroup parse_coeff_spec(const std::string& spec) {
    if (spec == "u1" || spec == "U1" || spec == "U(1)" || spec == "qmodz") {
        return CoeffGroup::qmodz();
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw MalformedInputError("unknown coefficient group spec '" + spec + "'");
    }
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    auto parse_int = [&](const std::string& s) -> Int {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw MalformedInputError("bad integer '" + s + "' in group spec");
        }
        return Int(s);
    };
    // The component structure is kept exactly as written: abelian:2,3 is the
    // two-component embedding, not its invariant-factor form cyclic:6, so
    // that file values keep the arity the user chose.
    auto checked = [&](Int m) {
        if (m < 1) throw MalformedInputError("modulus must be at least 1 in '" + spec + "'");
        return m;
    };
    if (kind == "cyclic") {
        return CoeffGroup::from_moduli({checked(parse_int(rest))});
    }
    if (kind == "abelian") {
        std::vector<Int> moduli;
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) moduli.push_back(checked(parse_int(tok)));
        if (moduli.empty()) throw MalformedInputError("empty factor list in group spec");
        return CoeffGroup::from_moduli(std::move(moduli));
    }
    throw MalformedInputError("unknown coefficient group spec '" + spec + "'");
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1) {
        out << "/" << boost::multiprecision::denominator(q);
    }
    return out.str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    auto parse_part = [&](const std::string& part) -> Int {
        std::string digits = part;
        bool neg = false;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            neg = digits[0] == '-';
            digits = digits.substr(1);
        }
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw MalformedInputError("bad rational '" + s + "'");
        }
        Int v(digits);
        return neg ? Int(-v) : v;
    };
    if (slash == std::string::npos) return Rational(parse_part(s));
    Int num = parse_part(s.substr(0, slash));
    Int den = parse_part(s.substr(slash + 1));
    if (den == 0) throw MalformedInputError("zero denominator in '" + s + "'");
    return Rational(num, den);
}

}  // namespace statesum
