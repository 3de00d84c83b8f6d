#include "core/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "core/rng.hpp"

namespace pg {

namespace {

// Parse a decimal mantissa with optional sign and fractional part plus an
// optional exponent, into an exact rational.
Rat parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  std::string int_part, frac_part;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    int_part += text[pos++];
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      frac_part += text[pos++];
  }
  long exp10 = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_neg = text[pos] == '-';
      ++pos;
    }
    std::string exp_digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      exp_digits += text[pos++];
    if (exp_digits.empty()) throw std::invalid_argument("bad exponent in '" + text + "'");
    exp10 = std::stol(exp_digits);
    if (exp_neg) exp10 = -exp10;
  }
  if (pos != text.size() || (int_part.empty() && frac_part.empty()))
    throw std::invalid_argument("malformed rational '" + text + "'");

  mpz_class num(int_part.empty() ? "0" : int_part);
  for (char c : frac_part) {
    num *= 10;
    num += c - '0';
  }
  mpz_class den(1);
  long down = static_cast<long>(frac_part.size()) - exp10;
  mpz_class ten(10);
  if (down > 0) {
    mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(down));
  } else if (down < 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-down));
    num *= scale;
  }
  if (neg) num = -num;
  Rat out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rat out(num, den);
    out.canonicalize();
    return out;
  }
  return parse_decimal(text);
}

std::string to_decimal(const Rat& x, int sig_digits) {
  if (sig_digits < 1) throw std::invalid_argument("sig_digits must be >= 1");
  if (x == 0) {
    std::string s = "0.";
    s.append(static_cast<std::size_t>(sig_digits - 1), '0');
    return s;
  }
  const bool neg = x < 0;
  const Rat ax = neg ? Rat(-x) : x;

  // exponent e with 10^e <= ax < 10^(e+1)
  long e = 0;
  Rat probe = ax;
  while (probe >= 10) {
    probe /= 10;
    ++e;
  }
  while (probe < 1) {
    probe *= 10;
    --e;
  }

  // Round ax * 10^(sig-1-e) half away from zero to an integer of sig digits.
  long shift = sig_digits - 1 - e;
  Rat scaled = ax;
  mpz_class ten(10), pow10;
  if (shift >= 0) {
    mpz_pow_ui(pow10.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
    scaled *= Rat(pow10);
  } else {
    mpz_pow_ui(pow10.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
    scaled /= Rat(pow10);
  }
  mpz_class twice_num = 2 * scaled.get_num() + scaled.get_den();  // floor(x+1/2)
  mpz_class digits_int;
  mpz_fdiv_q(digits_int.get_mpz_t(), twice_num.get_mpz_t(),
             mpz_class(2 * scaled.get_den()).get_mpz_t());
  std::string digits = digits_int.get_str();
  if (static_cast<int>(digits.size()) > sig_digits) {
    // rounding carried over (e.g. 9.99..9 -> 10.0..0)
    digits.pop_back();
    ++e;
  }

  std::string out;
  if (neg) out += '-';
  if (e >= sig_digits - 1 && e <= 18) {
    // integral value within the digit budget: pad with zeros, no point needed
    out += digits;
    out.append(static_cast<std::size_t>(e - (sig_digits - 1)), '0');
    if (e == sig_digits - 1) {
      // all significant digits before the point; keep plain integer form
    }
  } else if (e >= 0 && e < sig_digits - 1) {
    out += digits.substr(0, static_cast<std::size_t>(e + 1));
    out += '.';
    out += digits.substr(static_cast<std::size_t>(e + 1));
  } else if (e < 0 && e >= -6) {
    out += "0.";
    out.append(static_cast<std::size_t>(-e - 1), '0');
    out += digits;
  } else {
    // scientific form for extreme magnitudes
    out += digits.substr(0, 1);
    out += '.';
    out += digits.substr(1);
    out += 'e';
    out += std::to_string(e);
  }
  return out;
}

std::string to_fraction(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_pow(const Rat& base, unsigned n) {
  Rat acc(1);
  Rat b = base;
  unsigned k = n;
  while (k > 0) {
    if (k & 1u) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

Rat random_rational(std::uint64_t seed, std::uint64_t index, unsigned den) {
  std::uint64_t h = mix64(mix64(seed ^ 0xA5A5A5A5DEADBEEFull) ^ index);
  Rat out(static_cast<unsigned long>(h % (den + 1)), static_cast<unsigned long>(den));
  out.canonicalize();
  return out;
}

}  // namespace pg
