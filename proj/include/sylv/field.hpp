#ifndef SYLV_FIELD_HPP
#define SYLV_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sylv {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator so that equality is structural.
class Rational {
   public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const BigInt& value) : value_(value) {}

    static Rational from_integer(const BigInt& value) { return Rational(value); }

    /// Parses `-?digits(/digits)?`. Throws std::invalid_argument on malformed
    /// text or a zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    Rational inverse() const;
    std::string to_string() const { return value_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }

    const mpq_class& raw() const { return value_; }

   private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

/// Residue modulo a prime p with 2^30 < p < 2^62.
///
/// The modulus of freshly constructed values comes from the calling thread's
/// current context (see ModP::Scope). Every value remembers its modulus, and
/// mixing values of different moduli throws std::domain_error.
class ModP {
   public:
    using Residue = std::uint64_t;

    /// 2^61 - 1.
    static constexpr Residue kDefaultModulus = 2305843009213693951ULL;

    /// Installs a modulus for the current thread for the lifetime of the scope.
    class Scope {
       public:
        explicit Scope(Residue modulus);
        ~Scope();
        Scope(const Scope&) = delete;
        Scope& operator=(const Scope&) = delete;

       private:
        Residue saved_;
    };

    static Residue current_modulus();
    /// Throws std::invalid_argument unless p is a prime in (2^30, 2^62).
    static void validate_modulus(Residue p);

    ModP() : ModP(0L) {}
    ModP(long value);

    static ModP from_integer(const BigInt& value);
    static ModP parse(std::string_view text);

    Residue residue() const { return residue_; }
    Residue modulus() const { return modulus_; }
    bool is_zero() const { return residue_ == 0; }

    ModP inverse() const;
    std::string to_string() const { return std::to_string(residue_); }

    ModP operator-() const;
    ModP& operator+=(const ModP& rhs);
    ModP& operator-=(const ModP& rhs);
    ModP& operator*=(const ModP& rhs);
    ModP& operator/=(const ModP& rhs);

    friend ModP operator+(ModP lhs, const ModP& rhs) { return lhs += rhs; }
    friend ModP operator-(ModP lhs, const ModP& rhs) { return lhs -= rhs; }
    friend ModP operator*(ModP lhs, const ModP& rhs) { return lhs *= rhs; }
    friend ModP operator/(ModP lhs, const ModP& rhs) { return lhs /= rhs; }
    friend bool operator==(const ModP& lhs, const ModP& rhs);

   private:
    ModP(Residue residue, Residue modulus) : residue_(residue), modulus_(modulus) {}
    void check_same_modulus(const ModP& other) const;

    Residue residue_;
    Residue modulus_;
};

/// The scalar types every algorithm in this library is instantiated for.
template <class F>
concept ExactField = std::regular<F> && requires(F a, const F& b, const BigInt& z, std::string_view s) {
    { F(0L) };
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.inverse() } -> std::same_as<F>;
    { a.to_string() } -> std::same_as<std::string>;
    { F::from_integer(z) } -> std::same_as<F>;
    { F::parse(s) } -> std::same_as<F>;
};

static_assert(ExactField<Rational>);
static_assert(ExactField<ModP>);

/// Binomial coefficient; 0 whenever n < 0, k < 0 or k > n.
BigInt binomial(long n, long k);

/// (-1)^e for any integer e.
inline int sign_of_power(long e) { return (e % 2 == 0) ? 1 : -1; }

template <ExactField F>
F signed_scalar(long e) {
    return F(static_cast<long>(sign_of_power(e)));
}

template <ExactField F>
F power(const F& base, unsigned exponent) {
    F result(1L);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& q);
std::ostream& operator<<(std::ostream& os, const ModP& a);

}  // namespace sylv

#endif  // SYLV_FIELD_HPP
