#ifndef NILFIX_SPECTRUM_HPP
#define NILFIX_SPECTRUM_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilfix/bigint.hpp"
#include "nilfix/polynomial.hpp"
#include "nilfix/reidemeister.hpp"

namespace nilfix {

enum class ScanSource { engine, closed_form };

/// No checkpoint file at the given path. Distinct from an empty scan.
struct CheckpointMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unreadable or inconsistent checkpoint contents. Distinct from an empty
/// scan. A torn final line (interrupted append) is tolerated, not corrupt.
struct CheckpointCorrupt : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScanParams {
  int r = 2;
  int c = 2;
  long long bound = 1;                ///< coefficient box half-width B
  std::optional<BigInt> max_value;    ///< collect only values <= this, when set
  ScanSource source = ScanSource::engine;

  bool operator==(const ScanParams&) const = default;
};

/// Values found while enumerating a coefficient box, with the first witness
/// polynomial (coefficients a_0..a_r) per value, and the resume position.
///
/// Boxes: for (r,c) = (3,3) the scan runs over (a,b) = (1+a_1, 1+a_2) with
/// |a|,|b| <= B and a_0 = +1 (the a_0 = -1 branch only produces infinity
/// there); finite values then satisfy R >= 4(|a|+|b|) whenever a != +-b, so
/// the box is complete below 4(B+1). Everything else enumerates
/// |a_i| <= B with both a_0 = -1 and a_0 = +1, except that closed-form
/// scans of (2,2) and (2,3) keep only their a_0 = -1 domain.
struct SpectrumScan {
  ScanParams params;
  std::map<BigInt, std::vector<BigInt>> values; ///< value -> first witness found
  std::uint64_t checkpoint = 0;                 ///< enumerated tuple count
  std::uint64_t total_tuples = 0;

  bool complete() const { return checkpoint == total_tuples; }
  bool operator==(const SpectrumScan&) const = default;
};

struct ScanOptions {
  int workers = 1;
  std::uint64_t batch_size = 8192;
  /// When set: resume from this file if it exists, and append one record
  /// per finished batch (single writer, append-only newline-delimited JSON).
  std::optional<std::filesystem::path> checkpoint_path;
  /// Test hook: return once at least this many tuples are enumerated.
  std::optional<std::uint64_t> stop_after;
};

/// Enumerates the coefficient box for (r, c) and collects every finite
/// Reidemeister number (optionally capped by max_value). Results are
/// bit-identical for any worker count or batch size. The closed_form source
/// is only supported for (r,c) in {(2,2),(3,2),(2,3),(3,3)}.
SpectrumScan scan_box(const ScanParams& params, const ScanOptions& options = {});

/// Finite values below this cutoff are provably complete for an (a,b) box
/// scan of (3,3) with the given bound: 4 * (bound + 1).
BigInt n33_completeness_cutoff(long long bound);

struct MembershipResult {
  bool member = false;
  std::optional<IntPolynomial> witness; ///< engine-verified when present
};

/// Decides n in Spec_R by the characterized spectra:
///   (2,2): even numbers        witness q2(n/2)
///   (3,2): odd or 4 | n        witness q3((n-1)/2) or r3(n/4)
///   (2,3): twice a square      witness q2(sqrt(n/2))
/// Supported (r,c) only; n >= 1.
MembershipResult spectrum_membership(int r, int c, const BigInt& n);

struct AuditReport {
  int r = 0;
  int c = 0;
  std::size_t sample_count = 0;
  std::size_t finite_count = 0;
  std::size_t infinite_count = 0;
  bool expect_all_infinite = false; ///< c >= 2r
  bool check_n33_classes = false;   ///< finite values must lie in 32N u 4(2N-1)
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Divisibility audit over automorphism characteristic polynomials; needs
/// c >= r. Every finite value must be even; for c >= 2r every value must be
/// infinite; for (3,3) finite values must lie in 32N u 4(2N-1).
AuditReport parity_audit(int r, int c, std::span<const IntPolynomial> samples);

/// Deterministic sample generator: monic degree-r polynomials with uniform
/// |a_i| <= coeff_bound and a_0 = fixed_a0 when given, else random +-1.
std::vector<IntPolynomial> random_polynomials(int r, std::size_t count, long long coeff_bound,
                                              std::uint64_t seed,
                                              std::optional<int> fixed_a0 = std::nullopt);

/// Round-trip persistence of a scan (same newline-delimited JSON format as
/// the incremental checkpoints). resume_scan throws CheckpointMissing /
/// CheckpointCorrupt.
void persist_scan(const SpectrumScan& scan, const std::filesystem::path& path);
SpectrumScan resume_scan(const std::filesystem::path& path);

} // namespace nilfix

#endif
