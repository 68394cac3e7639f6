#ifndef VOAF_CYCLOTOMIC_HPP
#define VOAF_CYCLOTOMIC_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "voaf/rational.hpp"

namespace voaf {

class Cyclotomic;

// The fixed cyclotomic field Q(zeta_N) of a workspace. Elements are stored in
// the power basis 1, zeta, ..., zeta^{phi(N)-1}, always reduced modulo the
// N-th cyclotomic polynomial, so equality is coefficient-wise.
class CycloField : public std::enable_shared_from_this<CycloField> {
public:
    explicit CycloField(long order);

    long order() const { return order_; }
    long degree() const { return degree_; }

    // Monic minimal polynomial of zeta_N over Q; coefficient i belongs to x^i.
    const std::vector<Rational>& minpoly() const { return minpoly_; }

    // Reduces an arbitrary-degree polynomial in zeta modulo the minimal
    // polynomial; the result has fewer than degree() entries.
    std::vector<Rational> reduce(std::vector<Rational> poly) const;

    Cyclotomic zero() const;
    Cyclotomic one() const;
    Cyclotomic from_rational(const Rational& q) const;

    // zeta_N^j, any integer j.
    Cyclotomic zeta(long j) const;

    // e^{2 pi i q}; requires q*N integral.
    Cyclotomic phase(const Rational& q) const;

private:
    long order_;
    long degree_;
    std::vector<Rational> minpoly_;
    // reduced representations of zeta^j for degree() <= j < 2*degree()-1
    std::vector<std::vector<Rational>> pow_table_;
};

using CycloFieldPtr = std::shared_ptr<const CycloField>;

CycloFieldPtr make_cyclo_field(long order);

// An exact element of the workspace field. A default-constructed value is the
// zero element and is compatible with every field.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(CycloFieldPtr field, std::map<long, Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;
    // The value as a rational; error unless is_rational().
    Rational as_rational() const;

    const std::map<long, Rational>& coeffs() const { return coeffs_; }
    const CycloFieldPtr& field() const { return field_; }

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    Cyclotomic scale(const Rational& q) const;
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Renders as e.g. "1/2 + 3*zeta(2) - zeta(5)"; "0" for zero.
    std::string str() const;

private:
    void strip_zeros();
    static const CycloFieldPtr& common_field(const Cyclotomic& a, const Cyclotomic& b);

    CycloFieldPtr field_; // null only for zero
    std::map<long, Rational> coeffs_;
};

} // namespace voaf

#endif
