#include "tnnlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace tnnlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  bool negative = false;
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational literal '" + std::string(s) + "'");
    }
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    result = Rational(n, d);
    result.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw std::invalid_argument("malformed decimal literal '" + std::string(s) + "'");
    }
    mpz_class n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    result = Rational(n, d);
    result.canonicalize();
  } else {
    if (!all_digits(body)) {
      throw std::invalid_argument("malformed rational literal '" + std::string(s) + "'");
    }
    result = Rational(mpz_class(std::string(body), 10));
  }
  return negative ? Rational(-result) : result;
}

RatVector parse_rational_list(std::string_view text) {
  RatVector out;
  std::string_view s = trim(text);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(parse_rational(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale;
  // round half away from zero: floor(scaled + 1/2)
  Rational shifted = scaled + Rational(1, 2);
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  mpz_class whole, frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), rounded.get_mpz_t(), scale.get_mpz_t());
  std::string out;
  if (q < 0 && rounded != 0) out += '-';
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

long double to_long_double(const Rational& q) {
  // two-step division keeps long double precision for moderate sizes
  long double num = mpz_get_d(q.get_num_mpz_t());
  long double den = mpz_get_d(q.get_den_mpz_t());
  if (std::isfinite(num) && std::isfinite(den) && mpz_sizeinbase(q.get_num_mpz_t(), 2) < 60 &&
      mpz_sizeinbase(q.get_den_mpz_t(), 2) < 60) {
    return static_cast<long double>(mpz_get_si(q.get_num_mpz_t())) /
           static_cast<long double>(mpz_get_si(q.get_den_mpz_t()));
  }
  return static_cast<long double>(q.get_d());
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value cannot be made exact");
  return Rational(x);
}

Rational lcm_of_denominators(const RatVector& v) {
  mpz_class l = 1;
  for (const auto& q : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  return Rational(l);
}

std::int64_t random_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("random_int: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  auto den = random_int(rng, 1, max_den);
  auto num = random_int(rng, lo * den, hi * den);
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

Rational random_positive_rational(std::mt19937_64& rng, int max_num, int max_den) {
  auto den = random_int(rng, 1, max_den);
  auto num = random_int(rng, 1, max_num);
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

}  // namespace tnnlab
