#include "mlk/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace mlk {

IntPoly IntPoly::monomial(int degree, Int v) {
    std::vector<Int> c(degree + 1, Int(0));
    c[degree] = std::move(v);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

Int IntPoly::operator()(const Int& x) const {
    Int v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Rat IntPoly::operator()(const Rat& x) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& d) const {
    if (!d.is_monic()) throw divisibility_error("divmod requires a monic divisor");
    std::vector<Int> rem(c_);
    int dd = d.degree();
    int n = static_cast<int>(rem.size()) - 1;
    if (n < dd) return {IntPoly(), *this};
    std::vector<Int> quot(n - dd + 1, Int(0));
    for (int k = n; k >= dd; --k) {
        Int q = rem[k];
        if (q == 0) continue;
        quot[k - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d.c_[j];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::div_exact(const IntPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw divisibility_error("polynomial division left a remainder");
    return q;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Int mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPoly t_pow_minus_one(long n) {
    std::vector<Int> c(n + 1, Int(0));
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

IntPoly t_pow_plus_one(long n) {
    std::vector<Int> c(n + 1, Int(0));
    c[0] = 1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

const IntPoly& cyclotomic_poly(long n) {
    static std::map<long, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw error("cyclotomic_poly requires n >= 1");
    // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // without re-locking: build all divisors bottom-up.
    std::vector<long> need;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0 && !cache.count(d)) need.push_back(d);
    for (long d : need) {
        IntPoly p = t_pow_minus_one(d);
        for (long e = 1; e < d; ++e)
            if (d % e == 0) p = p.div_exact(cache.at(e));
        cache.emplace(d, std::move(p));
    }
    return cache.at(n);
}

std::optional<std::multiset<long>> factor_into_cyclotomics(const IntPoly& p) {
    if (!p.is_monic()) return std::nullopt;
    std::multiset<long> out;
    IntPoly rest = p;
    while (rest.degree() > 0) {
        bool divided = false;
        // deg Phi_n = phi(n) <= n, and phi(n) >= sqrt(n/2), so n is bounded
        // by 2*deg^2; in practice the loop exits long before that.
        long bound = 2 * static_cast<long>(rest.degree()) * rest.degree() + 2;
        for (long n = 1; n <= bound; ++n) {
            if (euler_phi(n) > rest.degree()) continue;
            const IntPoly& phi = cyclotomic_poly(n);
            auto [q, r] = rest.divmod(phi);
            if (r.is_zero()) {
                out.insert(n);
                rest = q;
                divided = true;
                break;
            }
        }
        if (!divided) return std::nullopt;
    }
    if (rest.degree() != 0 || rest.leading() != 1) return std::nullopt;
    return out;
}

IntPoly product_of_cyclotomics(const std::multiset<long>& ns) {
    IntPoly p = IntPoly::constant(1);
    for (long n : ns) p = p * cyclotomic_poly(n);
    return p;
}

}  // namespace mlk
