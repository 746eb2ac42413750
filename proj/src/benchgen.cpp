#include "jtsc/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace jtsc {

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::next_u64() {
  state = splitmix64(state);
  return state;
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

Instance znorm_instance(const Instance& inst) {
  const std::size_t n = inst.size();
  double sum = 0.0, max_abs = 0.0;
  for (double v : inst) {
    sum += v;
    max_abs = std::max(max_abs, std::fabs(v));
  }
  const double mu = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double v : inst) ss += (v - mu) * (v - mu);
  const double sigma = std::sqrt(ss / static_cast<double>(n));
  Instance out(n, 0.0);
  if (sigma <= flat_threshold(max_abs, 1e-12)) return out;
  for (std::size_t i = 0; i < n; ++i) out[i] = (inst[i] - mu) / sigma;
  return out;
}

}  // namespace detail

std::pair<std::vector<Instance>, std::vector<Instance>> builtin_classes(
    const std::string& shape_pair, std::size_t instance_len,
    std::uint64_t seed) {
  if (instance_len < 32) {
    throw InputError("builtin instances need a length of at least 32");
  }
  if (shape_pair != "bumps") {
    throw InputError("unknown shape pair '" + shape_pair +
                     "' (available: bumps)");
  }

  detail::Rng rng(detail::splitmix64(seed ^ 0x62756d7073ULL));
  constexpr std::size_t kPerClass = 20;
  const double denom = static_cast<double>(instance_len - 1);

  auto gauss_bump = [](double x, double c, double w) {
    const double z = (x - c) / w;
    return std::exp(-0.5 * z * z);
  };

  // Every instance is a shared full-support class waveform (so no window is
  // ever near-flat and z-normalization cannot amplify small texture into
  // full-scale differences) plus a unique per-instance wiggle standing in
  // for the instance-to-instance variability of real archive data. The
  // wiggle tapers to zero at the instance edges, so windows straddling two
  // instances stay close to the shared waveforms.
  constexpr double kTwoPi = 6.283185307179586;
  auto wiggle = [&rng]() {
    struct {
      double amp[2], freq[2], phase[2];
    } w;
    for (int h = 0; h < 2; ++h) {
      w.amp[h] = rng.uniform(0.08, 0.15);
      w.freq[h] = rng.uniform(4.0, 10.0);
      w.phase[h] = rng.uniform(0.0, kTwoPi);
    }
    return w;
  };
  auto smoothstep = [](double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return 0.5 - 0.5 * std::cos(3.141592653589793 * t);
  };
  auto edge_taper = [smoothstep](double x) {
    return smoothstep(x / 0.2) * smoothstep((1.0 - x) / 0.2);
  };

  std::vector<Instance> bump, valleys;
  // Class 1: a tall narrow center bump (it sits entirely inside the centered
  // noise zone and anchors window alignment) over a textured base.
  for (std::size_t k = 0; k < kPerClass; ++k) {
    const double drift = k < kPerClass / 2 ? 0.0 : 1.0;
    const double c = 0.5 + rng.uniform(-0.005, 0.005);
    const double w = 0.05 + rng.uniform(-0.008, 0.008);
    const auto wig = wiggle();
    Instance inst(instance_len);
    for (std::size_t i = 0; i < instance_len; ++i) {
      const double x = static_cast<double>(i) / denom;
      double v = 1.8 * gauss_bump(x, c, w) + 0.45 * std::sin(kTwoPi * 2.0 * x) +
                 0.3 * std::sin(kTwoPi * 5.0 * x + 1.3 + 1.1 * drift) +
                 0.2 * std::sin(kTwoPi * 9.0 * x + 4.1 + 1.7 * drift);
      for (int h = 0; h < 2; ++h) {
        v += edge_taper(x) * wig.amp[h] *
             std::sin(kTwoPi * wig.freq[h] * x + wig.phase[h]);
      }
      inst[i] = v + rng.uniform(-0.02, 0.02);
    }
    bump.push_back(std::move(inst));
  }
  for (std::size_t k = 0; k < kPerClass; ++k) {
    const double drift = k < kPerClass / 2 ? 0.0 : 1.0;
    const double c1 = 0.28 + rng.uniform(-0.005, 0.005);
    const double c2 = 0.72 + rng.uniform(-0.005, 0.005);
    const double w = 0.11 + rng.uniform(-0.01, 0.01);
    const auto wig = wiggle();
    Instance inst(instance_len);
    for (std::size_t i = 0; i < instance_len; ++i) {
      const double x = static_cast<double>(i) / denom;
      double v = -1.8 * gauss_bump(x, c1, w) - 1.8 * gauss_bump(x, c2, w) +
                 0.45 * std::cos(kTwoPi * 3.0 * x + 0.7) +
                 0.3 * std::sin(kTwoPi * 7.0 * x + 2.9 + 1.1 * drift) +
                 0.2 * std::cos(kTwoPi * 11.0 * x + 5.3 + 1.7 * drift);
      for (int h = 0; h < 2; ++h) {
        v += edge_taper(x) * wig.amp[h] *
             std::sin(kTwoPi * wig.freq[h] * x + wig.phase[h]);
      }
      inst[i] = v + rng.uniform(-0.02, 0.02);
    }
    valleys.push_back(std::move(inst));
  }
  return {std::move(bump), std::move(valleys)};
}

std::map<std::string, std::vector<Instance>> load_labeled_instances(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open instance file: " + path.string());
  }

  std::map<std::string, std::vector<Instance>> classes;
  std::string line;
  std::size_t row = 0;
  std::size_t expected_len = 0;
  while (std::getline(in, line)) {
    ++row;
    // Normalize separators: commas and tabs both act as whitespace.
    for (char& ch : line) {
      if (ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
    }
    std::istringstream fields(line);
    std::string label;
    if (!(fields >> label)) continue;  // blank line

    Instance inst;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || !std::isfinite(v)) {
        throw InputError("row " + std::to_string(row) +
                         ": non-numeric or non-finite value '" + tok + "'");
      }
      inst.push_back(v);
    }
    if (inst.empty()) {
      throw InputError("row " + std::to_string(row) + ": no values after label");
    }
    if (expected_len == 0) {
      expected_len = inst.size();
    } else if (inst.size() != expected_len) {
      throw InputError("row " + std::to_string(row) + ": expected " +
                       std::to_string(expected_len) + " values, found " +
                       std::to_string(inst.size()));
    }
    classes[label].push_back(std::move(inst));
  }
  if (classes.size() < 2) {
    throw InputError("instance file " + path.string() +
                     " holds fewer than two classes");
  }
  return classes;
}

namespace {

struct SplitClass {
  std::vector<Instance> to_a;
  std::vector<Instance> to_b;
};

// Takes at most 20 instances (a seeded random subset when more are
// available, source order preserved), first half to the reference series,
// second half to the target series.
SplitClass select_and_split(const std::vector<Instance>& all,
                            detail::Rng& rng) {
  std::vector<std::size_t> chosen;
  if (all.size() > 20) {
    std::vector<std::size_t> order(all.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) {
      const std::size_t j = rng.next_u64() % i;
      std::swap(order[i - 1], order[j]);
    }
    chosen.assign(order.begin(), order.begin() + 20);
    std::sort(chosen.begin(), chosen.end());
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) chosen.push_back(i);
  }
  const std::size_t half_b = chosen.size() / 2;
  const std::size_t half_a = chosen.size() - half_b;

  SplitClass out;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    auto z = detail::znorm_instance(all[chosen[i]]);
    if (i < half_a) {
      out.to_a.push_back(std::move(z));
    } else {
      out.to_b.push_back(std::move(z));
    }
  }
  return out;
}

// Interleaves class-1/class-2 instances (class-1 first) into one series and
// injects the ramped noise windows into the class-1 instances.
TimeSeries build_side(const std::vector<Instance>& c1,
                      const std::vector<Instance>& c2, SeriesTag tag,
                      double amp_from, double amp_to, detail::Rng& rng,
                      std::vector<TruthInterval>& truth) {
  std::vector<double> values;
  const std::size_t rounds = std::max(c1.size(), c2.size());
  std::vector<std::pair<std::size_t, std::size_t>> c1_offsets;  // (ordinal, start)
  for (std::size_t r = 0; r < rounds; ++r) {
    if (r < c1.size()) {
      c1_offsets.emplace_back(r, values.size());
      values.insert(values.end(), c1[r].begin(), c1[r].end());
    }
    if (r < c2.size()) {
      values.insert(values.end(), c2[r].begin(), c2[r].end());
    }
  }

  const std::size_t inst_len = c1.empty() ? 0 : c1.front().size();
  const std::size_t noise_len = inst_len / 2;
  const std::size_t noise_off = (inst_len - noise_len) / 2;  // centered
  const std::size_t steps = c1.size();
  for (const auto& [ordinal, start] : c1_offsets) {
    const double frac =
        steps > 1 ? static_cast<double>(ordinal) / static_cast<double>(steps - 1)
                  : 0.0;
    const double amp = amp_from + (amp_to - amp_from) * frac;
    const std::size_t w0 = start + noise_off;
    for (std::size_t i = 0; i < noise_len; ++i) {
      values[w0 + i] += amp * (2.0 * rng.uniform01() - 1.0);
    }
    truth.push_back(TruthInterval{tag, w0, w0 + noise_len - 1, amp});
  }
  return TimeSeries{std::move(values)};
}

}  // namespace

BenchmarkCase generate_case(const std::vector<Instance>& class1,
                            const std::vector<Instance>& class2,
                            std::uint64_t seed, const NoiseRamp& ramp,
                            const std::string& class1_label,
                            const std::string& class2_label) {
  if (class1.size() < 2 || class2.size() < 2) {
    throw InputError("each class needs at least two instances");
  }
  std::size_t inst_len = class1.front().size();
  for (const auto* cls : {&class1, &class2}) {
    for (const auto& inst : *cls) {
      if (inst.size() != inst_len) {
        throw InputError("instances must all have the same length");
      }
    }
  }
  if (inst_len < 6) {
    throw InputError("instances too short to host a noise window");
  }

  detail::Rng rng(detail::splitmix64(seed));
  const SplitClass s1 = select_and_split(class1, rng);
  const SplitClass s2 = select_and_split(class2, rng);

  BenchmarkCase bc;
  bc.meta.instance_len = inst_len;
  bc.meta.noise_len = inst_len / 2;
  bc.meta.seed = seed;
  bc.meta.class1_label = class1_label;
  bc.meta.class2_label = class2_label;

  bc.t_a = build_side(s1.to_a, s2.to_a, SeriesTag::a, ramp.a_from, ramp.a_to,
                      rng, bc.truth);
  bc.t_b = build_side(s1.to_b, s2.to_b, SeriesTag::b, ramp.b_from, ramp.b_to,
                      rng, bc.truth);
  return bc;
}

}  // namespace jtsc
