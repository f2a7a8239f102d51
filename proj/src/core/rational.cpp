#include "core/rational.hpp"

#include <cctype>

namespace skewrank {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_int_token(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::vector<std::string> split(const std::string& csv, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s = trim(text);
  std::string num = s, den = "1";
  if (size_t k = s.find('/'); k != std::string::npos) {
    num = trim(s.substr(0, k));
    den = trim(s.substr(k + 1));
  }
  require(is_int_token(num) && is_int_token(den), errc::parse_error,
          "expected integer or fraction, got \"" + text + "\"");
  Int d(den);
  require(d != 0, errc::parse_error, "zero denominator in \"" + text + "\"");
  Rat v{Int(num), d};
  v.canonicalize();
  return v;
}

std::string format_rat(const Rat& v) { return v.get_str(); }

std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  if (trim(csv).empty()) return out;
  for (const auto& tok : split(csv, ',')) out.push_back(parse_rat(tok));
  return out;
}

std::vector<long> parse_long_list(const std::string& csv) {
  std::vector<long> out;
  for (const Rat& v : parse_rat_list(csv)) {
    require(is_integer(v), errc::parse_error, "expected integer, got " + format_rat(v));
    require(v.get_num().fits_slong_p(), errc::parse_error, "integer out of range");
    out.push_back(v.get_num().get_si());
  }
  return out;
}

std::string format_rat_list(const std::vector<Rat>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_rat(v[i]);
  }
  return out;
}

bool is_integer(const Rat& v) { return v.get_den() == 1; }

Rat falling_factorial(const Rat& a, int k) {
  require(k >= 0, errc::parse_error, "falling factorial needs k >= 0");
  Rat prod = 1;
  Rat term = a;
  for (int i = 0; i < k; ++i, term -= 1) prod *= term;
  return prod;
}

Rat shifted_power(const Rat& x, const std::vector<Rat>& y, int k) {
  require(k >= 0, errc::parse_error, "shifted power needs k >= 0");
  require(static_cast<size_t>(k) <= y.size(), errc::insufficient_y_sequence,
          "shifted power of order " + std::to_string(k) + " needs " + std::to_string(k) +
              " shift values, have " + std::to_string(y.size()));
  Rat prod = 1;
  for (int i = 0; i < k; ++i) prod *= x - y[i];
  return prod;
}

Int binomial(long n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), Int(n).get_mpz_t(), k);
  return r;
}

Int factorial(unsigned long k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

}  // namespace skewrank
