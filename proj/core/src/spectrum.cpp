#include "nilfix/spectrum.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <random>

#include <nlohmann/json.hpp>

namespace nilfix {

namespace {

using json = nlohmann::ordered_json;

bool is_ab_box(const ScanParams& p) { return p.r == 3 && p.c == 3; }

bool closed_form_supported(int r, int c) {
  return (r == 2 && c == 2) || (r == 3 && c == 2) || (r == 2 && c == 3) || (r == 3 && c == 3);
}

// Linearized coefficient box. Decoding is the single source of enumeration
// order, shared by fresh scans, resumed scans and all worker counts.
struct TupleScheme {
  int r;
  long long bound;
  bool ab_box;       // (3,3): iterate (a,b) with a_0 = +1
  bool negative_only; // closed-form (2,2)/(2,3): a_0 = -1 half of the box

  std::uint64_t width() const { return static_cast<std::uint64_t>(2 * bound + 1); }

  std::uint64_t total() const {
    std::uint64_t t = 1;
    for (int i = 1; i < r; ++i)
      t *= width();
    if (ab_box || negative_only)
      return t;
    return 2 * t;
  }

  std::vector<BigInt> decode(std::uint64_t tuple) const {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(r) + 1);
    coeffs[static_cast<std::size_t>(r)] = 1;
    if (ab_box) {
      const long long a = -bound + static_cast<long long>(tuple % width());
      const long long b = -bound + static_cast<long long>(tuple / width());
      coeffs[0] = 1;
      coeffs[1] = a - 1;
      coeffs[2] = b - 1;
      return coeffs;
    }
    std::uint64_t s = tuple;
    if (negative_only) {
      coeffs[0] = -1;
    } else {
      coeffs[0] = (s % 2 == 0) ? -1 : 1;
      s /= 2;
    }
    for (int i = 1; i < r; ++i) {
      coeffs[static_cast<std::size_t>(i)] = -bound + static_cast<long long>(s % width());
      s /= width();
    }
    return coeffs;
  }
};

TupleScheme make_scheme(const ScanParams& params) {
  TupleScheme scheme;
  scheme.r = params.r;
  scheme.bound = params.bound;
  scheme.ab_box = is_ab_box(params);
  scheme.negative_only = params.source == ScanSource::closed_form && params.r == 2;
  return scheme;
}

using FoundMap = std::map<BigInt, std::vector<BigInt>>;

FoundMap scan_range(const ScanParams& params, const TupleScheme& scheme,
                    const ReidemeisterEngine* engine, std::uint64_t from, std::uint64_t to) {
  FoundMap found;
  for (std::uint64_t t = from; t < to; ++t) {
    std::vector<BigInt> coeffs = scheme.decode(t);
    IntPolynomial p(coeffs);
    ReidemeisterValue value = ReidemeisterValue::infinity();
    if (params.source == ScanSource::closed_form) {
      auto cf = closed_form(params.r, params.c, p);
      if (!cf)
        throw std::logic_error("scan enumerated a tuple outside the closed form domain");
      value = *cf;
    } else {
      value = engine->compute(p, Mode::automorphism).value;
    }
    if (value.is_infinite())
      continue;
    if (params.max_value && value.value() > *params.max_value)
      continue;
    found.try_emplace(value.value(), std::move(coeffs));
  }
  return found;
}

std::string source_name(ScanSource s) {
  return s == ScanSource::engine ? "engine" : "closed_form";
}

ScanSource source_from_name(const std::string& name) {
  if (name == "engine")
    return ScanSource::engine;
  if (name == "closed_form")
    return ScanSource::closed_form;
  throw CheckpointCorrupt("unknown scan source '" + name + "'");
}

json header_record(const SpectrumScan& scan) {
  json h;
  h["type"] = "header";
  h["r"] = scan.params.r;
  h["c"] = scan.params.c;
  h["bound"] = scan.params.bound;
  h["max_value"] = scan.params.max_value ? json(scan.params.max_value->str()) : json(nullptr);
  h["source"] = source_name(scan.params.source);
  h["total_tuples"] = scan.total_tuples;
  return h;
}

json batch_record(std::uint64_t tuples, const std::vector<std::pair<BigInt, std::vector<BigInt>>>& found) {
  json b;
  b["type"] = "batch";
  b["tuples"] = tuples;
  json list = json::array();
  for (const auto& [value, witness] : found) {
    json w = json::array();
    for (const auto& coeff : witness)
      w.push_back(coeff.str());
    list.push_back(json::array({value.str(), w}));
  }
  b["found"] = std::move(list);
  return b;
}

void apply_batch(SpectrumScan& scan, const json& record) {
  const std::uint64_t tuples = record.at("tuples").get<std::uint64_t>();
  scan.checkpoint += tuples;
  for (const auto& entry : record.at("found")) {
    BigInt value(entry.at(0).get<std::string>());
    std::vector<BigInt> witness;
    for (const auto& coeff : entry.at(1))
      witness.emplace_back(coeff.get<std::string>());
    scan.values.try_emplace(std::move(value), std::move(witness));
  }
}

} // namespace

BigInt n33_completeness_cutoff(long long bound) { return BigInt(4) * (bound + 1); }

SpectrumScan scan_box(const ScanParams& params, const ScanOptions& options) {
  if (params.r < 2)
    throw std::domain_error("scan requires r >= 2");
  if (params.c < 1)
    throw std::domain_error("scan requires c >= 1");
  if (params.bound < 1)
    throw std::domain_error("scan requires bound >= 1");
  if (params.source == ScanSource::closed_form && !closed_form_supported(params.r, params.c))
    throw std::domain_error("closed-form source is only available for (2,2), (3,2), (2,3), (3,3)");

  const TupleScheme scheme = make_scheme(params);

  SpectrumScan scan;
  scan.params = params;
  scan.total_tuples = scheme.total();

  bool fresh = true;
  if (options.checkpoint_path && std::filesystem::exists(*options.checkpoint_path)) {
    scan = resume_scan(*options.checkpoint_path);
    if (!(scan.params == params) || scan.total_tuples != scheme.total())
      throw CheckpointCorrupt("checkpoint parameters do not match the requested scan");
    fresh = false;
  }

  std::ofstream log;
  if (options.checkpoint_path) {
    log.open(*options.checkpoint_path, fresh ? std::ios::trunc : std::ios::app);
    if (!log)
      throw std::runtime_error("cannot open checkpoint file for writing");
    if (fresh)
      log << header_record(scan).dump() << "\n" << std::flush;
  }

  std::optional<ReidemeisterEngine> engine;
  if (params.source == ScanSource::engine)
    engine.emplace(params.r, params.c);

  const int workers = std::max(1, options.workers);
  const std::uint64_t batch = std::max<std::uint64_t>(1, options.batch_size);

  while (scan.checkpoint < scan.total_tuples) {
    const std::uint64_t from = scan.checkpoint;
    const std::uint64_t to = std::min(scan.total_tuples, from + batch);

    std::vector<FoundMap> partials;
    if (workers == 1 || to - from < 2) {
      partials.push_back(scan_range(params, scheme, engine ? &*engine : nullptr, from, to));
    } else {
      const std::uint64_t span = to - from;
      const auto n = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), span);
      std::vector<std::future<FoundMap>> futures;
      for (std::uint64_t w = 0; w < n; ++w) {
        const std::uint64_t lo = from + span * w / n;
        const std::uint64_t hi = from + span * (w + 1) / n;
        futures.push_back(std::async(std::launch::async, [&, lo, hi] {
          return scan_range(params, scheme, engine ? &*engine : nullptr, lo, hi);
        }));
      }
      for (auto& f : futures)
        partials.push_back(f.get());
    }

    // Merge in enumeration order so the recorded witness is the first one
    // found, independent of the worker count.
    std::vector<std::pair<BigInt, std::vector<BigInt>>> fresh_values;
    for (auto& partial : partials)
      for (auto& [value, witness] : partial)
        if (scan.values.try_emplace(value, std::move(witness)).second)
          fresh_values.emplace_back(value, scan.values.at(value));
    scan.checkpoint = to;

    if (log.is_open()) {
      std::sort(fresh_values.begin(), fresh_values.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      log << batch_record(to - from, fresh_values).dump() << "\n" << std::flush;
    }
    if (options.stop_after && scan.checkpoint >= *options.stop_after)
      break;
  }
  return scan;
}

MembershipResult spectrum_membership(int r, int c, const BigInt& n) {
  if (n < 1)
    throw std::domain_error("membership is decided for positive integers only");
  const bool supported = (r == 2 && c == 2) || (r == 3 && c == 2) || (r == 2 && c == 3);
  if (!supported)
    throw std::domain_error("membership is characterized for (2,2), (3,2), (2,3) only");

  std::optional<IntPolynomial> witness;
  if (r == 2 && c == 2) {
    if (n % 2 == 0)
      witness = family_q2(n / 2);
  } else if (r == 3 && c == 2) {
    if (n % 2 == 1)
      witness = family_q3((n - 1) / 2);
    else if (n % 4 == 0)
      witness = family_r3(n / 4);
  } else { // (2,3): twice a square
    if (n % 2 == 0) {
      const BigInt half = n / 2;
      const BigInt root = sqrt(half);
      if (root >= 1 && root * root == half)
        witness = family_q2(root);
    }
  }
  if (!witness)
    return {false, std::nullopt};

  const auto check = reidemeister_number(*witness, c, Mode::automorphism).value;
  if (check.is_infinite() || check.value() != n)
    throw std::logic_error("witness failed engine verification");
  return {true, std::move(witness)};
}

AuditReport parity_audit(int r, int c, std::span<const IntPolynomial> samples) {
  if (c < r)
    throw std::domain_error("the divisibility audit requires c >= r");
  AuditReport report;
  report.r = r;
  report.c = c;
  report.sample_count = samples.size();
  report.expect_all_infinite = c >= 2 * r;
  report.check_n33_classes = (r == 3 && c == 3);

  const ReidemeisterEngine engine(r, c);
  for (const IntPolynomial& p : samples) {
    const auto value = engine.compute(p, Mode::automorphism).value;
    if (value.is_infinite()) {
      ++report.infinite_count;
      continue;
    }
    ++report.finite_count;
    const BigInt& v = value.value();
    if (report.expect_all_infinite) {
      report.violations.push_back("expected infinity, got " + v.str() + " for " + p.to_string());
      continue;
    }
    if (v % 2 != 0)
      report.violations.push_back("odd value " + v.str() + " for " + p.to_string());
    if (report.check_n33_classes) {
      const bool in_32n = v % 32 == 0;
      const bool in_4odd = v % 4 == 0 && (v / 4) % 2 == 1;
      if (!in_32n && !in_4odd)
        report.violations.push_back("value " + v.str() + " outside 32N u 4(2N-1) for " +
                                    p.to_string());
    }
  }
  return report;
}

std::vector<IntPolynomial> random_polynomials(int r, std::size_t count, long long coeff_bound,
                                              std::uint64_t seed, std::optional<int> fixed_a0) {
  if (r < 1)
    throw std::domain_error("polynomial degree must be >= 1");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long long> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> sign(0, 1);

  std::vector<IntPolynomial> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(r) + 1);
    coeffs[0] = fixed_a0 ? BigInt(*fixed_a0) : BigInt(sign(gen) ? 1 : -1);
    for (int j = 1; j < r; ++j)
      coeffs[static_cast<std::size_t>(j)] = coeff(gen);
    coeffs[static_cast<std::size_t>(r)] = 1;
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

void persist_scan(const SpectrumScan& scan, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot open checkpoint file for writing");
  out << header_record(scan).dump() << "\n";
  std::vector<std::pair<BigInt, std::vector<BigInt>>> found(scan.values.begin(),
                                                            scan.values.end());
  out << batch_record(scan.checkpoint, found).dump() << "\n";
}

SpectrumScan resume_scan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw CheckpointMissing("no checkpoint at " + path.string());

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty())
      lines.push_back(line);
  if (lines.empty())
    throw CheckpointCorrupt("checkpoint file is empty");

  SpectrumScan scan;
  try {
    const json header = json::parse(lines.front());
    if (header.at("type").get<std::string>() != "header")
      throw CheckpointCorrupt("first record is not a header");
    scan.params.r = header.at("r").get<int>();
    scan.params.c = header.at("c").get<int>();
    scan.params.bound = header.at("bound").get<long long>();
    if (!header.at("max_value").is_null())
      scan.params.max_value = BigInt(header.at("max_value").get<std::string>());
    scan.params.source = source_from_name(header.at("source").get<std::string>());
    scan.total_tuples = header.at("total_tuples").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw CheckpointCorrupt(std::string("unreadable checkpoint header: ") + e.what());
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    json record;
    try {
      record = json::parse(lines[i]);
    } catch (const json::exception&) {
      if (i + 1 == lines.size())
        break; // torn final append, resume from the last full batch
      throw CheckpointCorrupt("unreadable checkpoint record");
    }
    try {
      if (record.at("type").get<std::string>() != "batch")
        throw CheckpointCorrupt("unexpected record type");
      apply_batch(scan, record);
    } catch (const json::exception& e) {
      throw CheckpointCorrupt(std::string("malformed batch record: ") + e.what());
    }
  }
  if (scan.checkpoint > scan.total_tuples)
    throw CheckpointCorrupt("checkpoint counts more tuples than the box holds");
  return scan;
}

} // namespace nilfix
