#include "voaf/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

namespace voaf {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DenominatorNotSupported: return "DenominatorNotSupported";
        case ErrorKind::ExponentNotRepresentable: return "ExponentNotRepresentable";
        case ErrorKind::WindowUnderflow: return "WindowUnderflow";
        case ErrorKind::WindowAccess: return "WindowAccess";
        case ErrorKind::LogBoundExceeded: return "LogBoundExceeded";
        case ErrorKind::ExponentNotIntegral: return "ExponentNotIntegral";
        case ErrorKind::HConditionFailed: return "HConditionFailed";
        case ErrorKind::NotConformal: return "NotConformal";
        case ErrorKind::CertificateViolation: return "CertificateViolation";
        case ErrorKind::KindMismatch: return "KindMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

using Poly = std::vector<Rational>; // coefficient i belongs to x^i

void poly_trim(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

Poly poly_scale(Poly a, const Rational& s) {
    for (auto& c : a) c *= s;
    poly_trim(a);
    return a;
}

// Exact division; remainder must come out zero.
Poly poly_div_exact(Poly num, const Poly& den) {
    Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational lead = num.back() / den.back();
        size_t shift = num.size() - den.size();
        quot[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
        poly_trim(num);
    }
    if (!num.empty()) raise(ErrorKind::Internal, "non-exact polynomial division");
    poly_trim(quot);
    return quot;
}

// Division with remainder: a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    Poly quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational lead = a.back() / b.back();
        size_t shift = a.size() - b.size();
        quot[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        poly_trim(a);
    }
    poly_trim(quot);
    return {quot, a};
}

Poly cyclotomic_poly(long n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    static std::map<long, Poly> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Poly num(static_cast<size_t>(n) + 1, Rational(0));
    num[0] = Rational(-1);
    num[static_cast<size_t>(n)] = Rational(1);
    for (long d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_exact(num, cyclotomic_poly(d));
    memo[n] = num;
    return num;
}

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace

CycloField::CycloField(long order) : order_(order) {
    if (order <= 0) raise(ErrorKind::ConfigError, "cyclotomic order must be positive");
    minpoly_ = cyclotomic_poly(order);
    degree_ = static_cast<long>(minpoly_.size()) - 1;
    if (degree_ != euler_phi(order)) raise(ErrorKind::Internal, "cyclotomic degree mismatch");
    // zeta^j for degree <= j <= 2*degree-2, enough for products of reduced elements
    pow_table_.clear();
    Poly cur(static_cast<size_t>(degree_) + 1, Rational(0));
    cur[static_cast<size_t>(degree_)] = Rational(1);
    for (long j = degree_; j <= 2 * degree_ - 2; ++j) {
        Poly red = poly_divmod(cur, minpoly_).second;
        red.resize(static_cast<size_t>(degree_), Rational(0));
        pow_table_.push_back(red);
        // shift by one power of zeta
        cur.insert(cur.begin(), Rational(0));
    }
}

std::vector<Rational> CycloField::reduce(std::vector<Rational> poly) const {
    poly_trim(poly);
    if (static_cast<long>(poly.size()) <= degree_) return poly;
    if (static_cast<long>(poly.size()) <= 2 * degree_ - 1) {
        // hot path: fold the table entries in
        Poly out(poly.begin(), poly.begin() + degree_);
        out.resize(static_cast<size_t>(degree_), Rational(0));
        for (long j = degree_; j < static_cast<long>(poly.size()); ++j) {
            const Rational& c = poly[static_cast<size_t>(j)];
            if (is_zero(c)) continue;
            const auto& rep = pow_table_[static_cast<size_t>(j - degree_)];
            for (long i = 0; i < degree_; ++i) out[static_cast<size_t>(i)] += c * rep[static_cast<size_t>(i)];
        }
        poly_trim(out);
        return out;
    }
    return poly_divmod(poly, minpoly_).second;
}

Cyclotomic CycloField::zero() const { return Cyclotomic(); }

Cyclotomic CycloField::one() const { return from_rational(Rational(1)); }

Cyclotomic CycloField::from_rational(const Rational& q) const {
    if (is_zero(q)) return Cyclotomic();
    return Cyclotomic(shared_from_this(), {{0, q}});
}

Cyclotomic CycloField::zeta(long j) const {
    long k = j % order_;
    if (k < 0) k += order_;
    Poly p(static_cast<size_t>(k) + 1, Rational(0));
    p[static_cast<size_t>(k)] = Rational(1);
    Poly red = reduce(std::move(p));
    std::map<long, Rational> coeffs;
    for (size_t i = 0; i < red.size(); ++i)
        if (!is_zero(red[i])) coeffs[static_cast<long>(i)] = red[i];
    return Cyclotomic(shared_from_this(), std::move(coeffs));
}

Cyclotomic CycloField::phase(const Rational& q) const {
    Rational jq = q * order_;
    if (!is_integer(jq))
        raise(ErrorKind::DenominatorNotSupported,
              "phase exponent " + to_string(q) + " is not representable in Q(zeta_" +
                  std::to_string(order_) + ")");
    return zeta(to_long(jq));
}

CycloFieldPtr make_cyclo_field(long order) { return std::make_shared<const CycloField>(order); }

Cyclotomic::Cyclotomic(CycloFieldPtr field, std::map<long, Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    strip_zeros();
}

void Cyclotomic::strip_zeros() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = is_zero(it->second) ? coeffs_.erase(it) : std::next(it);
    if (coeffs_.empty()) field_.reset();
}

const CycloFieldPtr& Cyclotomic::common_field(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.field_ && b.field_ && a.field_->order() != b.field_->order())
        raise(ErrorKind::Internal, "mixing cyclotomic fields of different order");
    return a.field_ ? a.field_ : b.field_;
}

bool Cyclotomic::is_rational() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational Cyclotomic::as_rational() const {
    if (coeffs_.empty()) return Rational(0);
    if (!is_rational()) raise(ErrorKind::Internal, "cyclotomic value is not rational: " + str());
    return coeffs_.begin()->second;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& [i, c] : out.coeffs_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic out = *this;
    out += o;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic out = *this;
    out -= o;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    field_ = common_field(*this, o);
    for (const auto& [i, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.emplace(i, c);
        if (!inserted) it->second += c;
    }
    strip_zeros();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    field_ = common_field(*this, o);
    for (const auto& [i, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.emplace(i, -c);
        if (!inserted) it->second -= c;
    }
    strip_zeros();
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (is_zero() || o.is_zero()) return Cyclotomic();
    const CycloFieldPtr& f = common_field(*this, o);
    std::vector<Rational> prod(static_cast<size_t>(coeffs_.rbegin()->first + o.coeffs_.rbegin()->first) + 1,
                               Rational(0));
    for (const auto& [i, a] : coeffs_)
        for (const auto& [j, b] : o.coeffs_) prod[static_cast<size_t>(i + j)] += a * b;
    std::vector<Rational> red = f->reduce(std::move(prod));
    std::map<long, Rational> coeffs;
    for (size_t i = 0; i < red.size(); ++i)
        if (!is_zero(red[i])) coeffs[static_cast<long>(i)] = red[i];
    return Cyclotomic(f, std::move(coeffs));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
}

Cyclotomic Cyclotomic::scale(const Rational& q) const {
    if (is_zero(q)) return Cyclotomic();
    Cyclotomic out = *this;
    for (auto& [i, c] : out.coeffs_) c *= q;
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) raise(ErrorKind::Internal, "inverse of zero");
    if (is_rational()) return Cyclotomic(field_ ? field_ : nullptr, {{0, Rational(1) / coeffs_.begin()->second}});
    // extended Euclid in Q[x] against the minimal polynomial
    Poly a(static_cast<size_t>(coeffs_.rbegin()->first) + 1, Rational(0));
    for (const auto& [i, c] : coeffs_) a[static_cast<size_t>(i)] = c;
    Poly r0 = field_->minpoly(), r1 = a;
    Poly s0 = {}, s1 = {Rational(1)}; // coefficients of `a` in r0, r1
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) raise(ErrorKind::Internal, "element not invertible modulo cyclotomic polynomial");
    Poly inv = field_->reduce(poly_scale(std::move(s0), Rational(1) / r0[0]));
    std::map<long, Rational> coeffs;
    for (size_t i = 0; i < inv.size(); ++i)
        if (!is_zero(inv[i])) coeffs[static_cast<long>(i)] = inv[i];
    return Cyclotomic(field_, std::move(coeffs));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic acc = field_ ? field_->one() : Cyclotomic(nullptr, {{0, Rational(1)}});
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    auto it = coeffs_.begin();
    auto jt = o.coeffs_.begin();
    for (; it != coeffs_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

std::string Cyclotomic::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : coeffs_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        if (i == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << "zeta(" << i << ")";
        }
        first = false;
    }
    return os.str();
}

} // namespace voaf
