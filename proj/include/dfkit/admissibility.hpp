#pragma once

#include <string>

#include "dfkit/designs.hpp"

namespace dfkit {

/// lambda (v - 1) == k (k - 1), with 0 <= lambda <= k <= v.
struct DsVerdict {
  bool pass = false;
  DSParams params;
  u64 lhs = 0;  // lambda (v - 1)
  u64 rhs = 0;  // k (k - 1)
  bool range_ok = false;
};

DsVerdict ds_admissible(const DSParams& p);

/// Whether (v mu, k mu, lambda mu) can be admissible alongside an admissible
/// (v, k, lambda). Both sides are the expansion
///   (v-1)(k mu - 1) - (v mu - 1)(k - 1) = (v - k)(mu - 1).
struct ProportionalVerdict {
  bool pass = false;
  DSParams base;
  u64 mu = 1;
  i64 expanded = 0;  // (v-1)(k mu - 1) - (v mu - 1)(k - 1)
  i64 residual = 0;  // (v - k)(mu - 1)
  DsVerdict scaled;  // ds_admissible of the scaled triple
};

/// Throws Error if p itself is not admissible or mu < 1.
ProportionalVerdict proportional_pair_admissible(const DSParams& p, u64 mu);

/// k (k - 1) == lambda1 (n - 1) + lambda2 n (m - 1).
struct DdsVerdict {
  bool pass = false;
  DDSParams params;
  u64 lhs = 0;
  u64 within = 0;   // lambda1 (n - 1)
  u64 outside = 0;  // lambda2 n (m - 1)
};

DdsVerdict dds_counting_identity(const DDSParams& p);

/// Evaluation of the claimed ((q^m-1)h/e, (q^(m-1)-1)h/e, (q^(m-2)-1)h/e)
/// difference-set family. `singer` is the unscaled Singer triple and mu the
/// proportionality factor h (q-1)/e.
struct Result3Verdict {
  bool valid = false;
  DSParams claimed;
  DSParams singer;
  u64 mu = 1;
  DsVerdict admissibility;  // of the claimed triple
  i64 residual = 0;         // (v - k)(mu - 1) for the Singer triple
};

/// Throws Error unless q is a prime power, m >= 3, e | q - 1, gcd(m, e) = 1
/// and 1 <= h <= e.
Result3Verdict refute_result3(u64 q, u64 m, u64 e, u64 h);

}  // namespace dfkit
