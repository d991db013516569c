#include "dfkit/admissibility.hpp"

namespace dfkit {
namespace {

i64 checked_signed_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in multiplication");
  return r;
}

i64 as_signed(u64 x) {
  if (x > static_cast<u64>(INT64_MAX)) throw Error("integer overflow");
  return static_cast<i64>(x);
}

u64 exact_div(u64 num, u64 den, const char* what) {
  if (den == 0 || num % den != 0)
    throw Error(std::string(what) + ": " + std::to_string(num) + " is not divisible by " +
                std::to_string(den));
  return num / den;
}

}  // namespace

DsVerdict ds_admissible(const DSParams& p) {
  DsVerdict r;
  r.params = p;
  r.range_ok = p.lambda <= p.k && p.k <= p.v;
  r.lhs = p.v == 0 ? 0 : checked_mul(p.lambda, p.v - 1);
  r.rhs = p.k == 0 ? 0 : checked_mul(p.k, p.k - 1);
  r.pass = r.range_ok && p.v >= 1 && r.lhs == r.rhs;
  return r;
}

ProportionalVerdict proportional_pair_admissible(const DSParams& p, u64 mu) {
  if (mu < 1) throw Error("mu must be at least 1");
  if (!ds_admissible(p).pass) throw Error("base triple " + format(p) + " is not admissible");
  ProportionalVerdict r;
  r.base = p;
  r.mu = mu;
  const i64 v = as_signed(p.v), k = as_signed(p.k), m = as_signed(mu);
  r.expanded = checked_signed_mul(v - 1, checked_signed_mul(k, m) - 1) -
               checked_signed_mul(checked_signed_mul(v, m) - 1, k - 1);
  r.residual = checked_signed_mul(v - k, m - 1);
  if (r.expanded != r.residual) throw Error("internal error: expansion mismatch");
  r.scaled = ds_admissible({checked_mul(p.v, mu), checked_mul(p.k, mu), checked_mul(p.lambda, mu)});
  r.pass = r.residual == 0;
  return r;
}

DdsVerdict dds_counting_identity(const DDSParams& p) {
  DdsVerdict r;
  r.params = p;
  r.lhs = p.k == 0 ? 0 : checked_mul(p.k, p.k - 1);
  r.within = p.n == 0 ? 0 : checked_mul(p.lambda1, p.n - 1);
  r.outside = p.m == 0 ? 0 : checked_mul(p.lambda2, checked_mul(p.n, p.m - 1));
  r.pass = p.m >= 1 && p.n >= 1 && r.lhs == checked_add(r.within, r.outside);
  return r;
}

Result3Verdict refute_result3(u64 q, u64 m, u64 e, u64 h) {
  if (!as_prime_power(q)) throw Error(std::to_string(q) + " is not a prime power");
  if (m < 3) throw Error("m must be at least 3");
  if (e == 0 || (q - 1) % e != 0) throw Error("e must divide q - 1");
  if (gcd(m, e) != 1) throw Error("m and e must be coprime");
  if (h < 1 || h > e) throw Error("h must lie in [1, e]");
  if (m > 64) throw Error("m too large");

  const unsigned mm = static_cast<unsigned>(m);
  const u64 qm = checked_pow(q, mm), qm1 = checked_pow(q, mm - 1), qm2 = checked_pow(q, mm - 2);
  Result3Verdict r;
  r.claimed = {exact_div(checked_mul(qm - 1, h), e, "v"), exact_div(checked_mul(qm1 - 1, h), e, "k"),
               exact_div(checked_mul(qm2 - 1, h), e, "lambda")};
  r.singer = {exact_div(qm - 1, q - 1, "v"), exact_div(qm1 - 1, q - 1, "k"),
              exact_div(qm2 - 1, q - 1, "lambda")};
  r.mu = exact_div(checked_mul(h, q - 1), e, "mu");
  r.admissibility = ds_admissible(r.claimed);
  r.residual = checked_signed_mul(as_signed(r.singer.v) - as_signed(r.singer.k), as_signed(r.mu) - 1);
  r.valid = r.admissibility.pass;
  return r;
}

}  // namespace dfkit
