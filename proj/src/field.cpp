#include "sylv/field.hpp"

#include <cctype>
#include <stdexcept>

namespace sylv {

namespace {

struct RationalText {
    std::string_view numerator;
    std::string_view denominator;  // empty when absent
};

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

RationalText split_rational(std::string_view text) {
    RationalText out;
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "', expected -?digits(/digits)?");
    out.numerator = text.substr(0, text.size() - body.size() + num.size());
    out.denominator = den;
    return out;
}

thread_local ModP::Residue tl_modulus = ModP::kDefaultModulus;

using Wide = unsigned __int128;

ModP::Residue mul_mod(ModP::Residue a, ModP::Residue b, ModP::Residue p) {
    return static_cast<ModP::Residue>((static_cast<Wide>(a) * b) % p);
}

ModP::Residue reduce(const BigInt& value, ModP::Residue p) {
    static_assert(sizeof(unsigned long) == sizeof(ModP::Residue));
    return static_cast<ModP::Residue>(mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(p)));
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const RationalText parts = split_rational(text);
    const BigInt num(std::string(parts.numerator), 10);
    const BigInt den = parts.denominator.empty() ? BigInt(1) : BigInt(std::string(parts.denominator), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

ModP::Scope::Scope(Residue modulus) : saved_(tl_modulus) {
    validate_modulus(modulus);
    tl_modulus = modulus;
}

ModP::Scope::~Scope() { tl_modulus = saved_; }

ModP::Residue ModP::current_modulus() { return tl_modulus; }

void ModP::validate_modulus(Residue p) {
    if (p <= (Residue{1} << 30) || p >= (Residue{1} << 62))
        throw std::invalid_argument("prime modulus must lie in (2^30, 2^62)");
    const BigInt z(std::to_string(p), 10);
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

ModP::ModP(long value) : modulus_(tl_modulus) {
    const long long p = static_cast<long long>(modulus_);
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    residue_ = static_cast<Residue>(r);
}

ModP ModP::from_integer(const BigInt& value) {
    return ModP(reduce(value, tl_modulus), tl_modulus);
}

ModP ModP::parse(std::string_view text) {
    const Rational q = Rational::parse(text);
    const ModP den = from_integer(q.denominator());
    if (den.is_zero()) throw std::invalid_argument("denominator of '" + std::string(text) + "' vanishes modulo p");
    return from_integer(q.numerator()) / den;
}

ModP ModP::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2).
    Residue result = 1;
    Residue base = residue_;
    Residue e = modulus_ - 2;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, base, modulus_);
        base = mul_mod(base, base, modulus_);
        e >>= 1;
    }
    return ModP(result, modulus_);
}

void ModP::check_same_modulus(const ModP& other) const {
    if (modulus_ != other.modulus_) throw std::domain_error("mixing residues of different moduli");
}

ModP ModP::operator-() const { return ModP(residue_ == 0 ? 0 : modulus_ - residue_, modulus_); }

ModP& ModP::operator+=(const ModP& rhs) {
    check_same_modulus(rhs);
    residue_ = static_cast<Residue>((static_cast<Wide>(residue_) + rhs.residue_) % modulus_);
    return *this;
}

ModP& ModP::operator-=(const ModP& rhs) {
    check_same_modulus(rhs);
    residue_ = residue_ >= rhs.residue_ ? residue_ - rhs.residue_ : modulus_ - (rhs.residue_ - residue_);
    return *this;
}

ModP& ModP::operator*=(const ModP& rhs) {
    check_same_modulus(rhs);
    residue_ = mul_mod(residue_, rhs.residue_, modulus_);
    return *this;
}

ModP& ModP::operator/=(const ModP& rhs) {
    check_same_modulus(rhs);
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    return *this *= rhs.inverse();
}

bool operator==(const ModP& lhs, const ModP& rhs) {
    lhs.check_same_modulus(rhs);
    return lhs.residue_ == rhs.residue_;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }
std::ostream& operator<<(std::ostream& os, const ModP& a) { return os << a.to_string(); }

}  // namespace sylv
