#include "clonal/registry.hpp"

#include <numeric>

#include "text_scan.hpp"

namespace clonal {

namespace {

// Smallest unit of Z/m above 1, or 1 when there is none (m <= 2).
std::uint32_t default_twist(std::uint32_t m) {
  for (std::uint32_t b = 2; b < m; ++b) {
    if (std::gcd(b, m) == 1) return b;
  }
  return 1;
}

CyclicGroup parse_cyclic(std::string_view spec, std::size_t offset) {
  detail::Scanner s(spec);
  if (!s.consume('z')) throw ParseError("expected 'z<m>' or 's3' after 'power:'", offset);
  long m = s.integer();
  if (m < 1 || m > 1'000'000) throw ParseError("cyclic modulus must be in 1..1000000", offset + 1);
  auto mod = static_cast<std::uint32_t>(m);
  if (s.at_end()) return CyclicGroup(mod);
  if (!s.consume(':') || !s.consume_word("twist")) throw ParseError("expected ':twist'", offset + s.pos());
  if (s.at_end()) return CyclicGroup(mod, 1, default_twist(mod));
  s.expect('=');
  long a = s.integer();
  s.expect(',');
  long b = s.integer();
  s.expect_end();
  if (a < 0 || b < 0) throw ParseError("twist factors must be non-negative", offset);
  try {
    return CyclicGroup(mod, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), offset);
  }
}

}  // namespace

AnySystem make_system(std::string_view selector) {
  if (selector == "trivial") return std::make_shared<const TrivialSystem>();
  if (selector == "symmetric") return std::make_shared<const SymmetricSystem>();
  if (selector == "signed") return std::make_shared<const SignedSystem>();
  if (selector == "matrix") return std::make_shared<const MatrixSystem>();
  constexpr std::string_view power = "power:";
  if (selector.substr(0, power.size()) == power) {
    std::string_view base = selector.substr(power.size());
    if (base == "s3") return std::make_shared<const S3PowerSystem>(S3Group(false));
    if (base == "s3:twist") return std::make_shared<const S3PowerSystem>(S3Group(true));
    return std::make_shared<const CyclicPowerSystem>(parse_cyclic(base, power.size()));
  }
  throw ParseError("unknown instance '" + std::string(selector) +
                       "' (expected trivial, symmetric, signed, matrix, power:z<m>[:twist[=a,b]] or power:s3[:twist])",
                   0);
}

std::string system_name(const AnySystem& sys) {
  return std::visit([](const auto& s) { return std::string(s->name()); }, sys);
}

}  // namespace clonal
