#include "mexneedlet/sampled_frame.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mexneedlet/error.hpp"
#include "mexneedlet/spherical_harmonics.hpp"

namespace mexneedlet {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// Fourier coefficients in phi of G = sum_l m_l F_l restricted to one colatitude:
// G(phi) = C_0 + sum_{q >= 1} C_q cos(q phi) + S_q sin(q phi).
void ring_fourier(const LegendreTable& table, const HarmonicField& field,
                  std::span<const double> multiplier, std::vector<double>& c,
                  std::vector<double>& s) {
  const int L = table.band_limit();
  std::fill(c.begin(), c.end(), 0.0);
  std::fill(s.begin(), s.end(), 0.0);
  const int field_L = std::min(L, field.band_limit());
  for (int l = 0; l <= field_L; ++l) {
    const double ml = multiplier[static_cast<std::size_t>(l)];
    if (ml == 0.0) continue;
    c[0] += ml * field(l, 0) * table(l, 0);
    for (int q = 1; q <= l; ++q) {
      const double f = kSqrt2 * ml * table(l, q);
      c[static_cast<std::size_t>(q)] += f * field(l, q);
      s[static_cast<std::size_t>(q)] += f * field(l, -q);
    }
  }
}

// cos(q phi) and sin(q phi) for q = 0..L.
void trig_table(double phi, std::vector<double>& cq, std::vector<double>& sq) {
  const double c1 = std::cos(phi);
  const double s1 = std::sin(phi);
  cq[0] = 1.0;
  sq[0] = 0.0;
  for (std::size_t q = 1; q < cq.size(); ++q) {
    cq[q] = cq[q - 1] * c1 - sq[q - 1] * s1;
    sq[q] = sq[q - 1] * c1 + cq[q - 1] * s1;
  }
}

double trig_eval(const std::vector<double>& c, const std::vector<double>& s,
                 const std::vector<double>& cq, const std::vector<double>& sq) {
  double v = c[0];
  for (std::size_t q = 1; q < c.size(); ++q) v += c[q] * cq[q] + s[q] * sq[q];
  return v;
}

// out(l, q) += m_l * Y-normalisation * T_q, where T^c_q / T^s_q are the node
// sums of (coefficient * cos / sin(q phi)).
void ring_adjoint(const LegendreTable& table, std::span<const double> multiplier,
                  const std::vector<double>& tc, const std::vector<double>& ts,
                  HarmonicField& out) {
  const int L = table.band_limit();
  for (int l = 0; l <= L; ++l) {
    const double ml = multiplier[static_cast<std::size_t>(l)];
    if (ml == 0.0) continue;
    out(l, 0) += ml * table(l, 0) * tc[0];
    for (int q = 1; q <= l; ++q) {
      const double f = kSqrt2 * ml * table(l, q);
      out(l, q) += f * tc[static_cast<std::size_t>(q)];
      out(l, -q) += f * ts[static_cast<std::size_t>(q)];
    }
  }
}

enum class RingMode { skip, fast, direct };

// Decides how a ring is processed and fills `kept` for the direct path.
RingMode classify_ring(const Ring& ring, int j, int L, const FrameSelection& selection,
                       bool direct_only, std::vector<char>& kept) {
  kept.assign(static_cast<std::size_t>(ring.count), 1);
  std::size_t n_kept = static_cast<std::size_t>(ring.count);
  if (selection.keep) {
    n_kept = 0;
    for (int n = 0; n < ring.count; ++n) {
      const Vec3 x = from_angles(ring.theta, ring.phi0 + kTwoPi * n / ring.count);
      const bool k = selection.keep(j, x);
      kept[static_cast<std::size_t>(n)] = k ? 1 : 0;
      n_kept += k ? 1 : 0;
    }
  }
  if (n_kept == 0) return RingMode::skip;
  const bool full = n_kept == static_cast<std::size_t>(ring.count);
  if (full && !direct_only && ring.count > 2 * L) return RingMode::fast;
  return RingMode::direct;
}

}  // namespace

double coefficient_energy(const FrameCoefficients& coefficients) {
  double sum = 0.0;
  for (const auto& scale : coefficients) {
    for (double v : scale.values) sum += v * v;
  }
  return sum;
}

SampledFrame::SampledFrame(int band_limit, std::vector<SampledScale> scales)
    : L_(band_limit), scales_(std::move(scales)) {
  if (band_limit < 0) throw ParameterError("band limit must be >= 0");
  if (scales_.empty()) throw ParameterError("frame needs at least one scale");
  std::sort(scales_.begin(), scales_.end(),
            [](const SampledScale& x, const SampledScale& y) { return x.j < y.j; });
  for (std::size_t i = 0; i < scales_.size(); ++i) {
    if (scales_[i].multiplier.size() != static_cast<std::size_t>(band_limit + 1)) {
      throw ParameterError("scale multiplier must have L + 1 entries");
    }
    if (i > 0 && scales_[i].j == scales_[i - 1].j) throw ParameterError("duplicate scale index");
  }
}

const SampledScale& SampledFrame::scale(int j) const {
  const auto it = std::lower_bound(scales_.begin(), scales_.end(), j,
                                   [](const SampledScale& s, int v) { return s.j < v; });
  if (it == scales_.end() || it->j != j) {
    throw ScaleRangeError("scale " + std::to_string(j) + " is not part of the frame");
  }
  return *it;
}

std::size_t SampledFrame::element_count() const {
  std::size_t n = 0;
  for (const auto& s : scales_) n += s.layout.size();
  return n;
}

void SampledFrame::check_field(const HarmonicField& field) const {
  if (field.band_limit() > L_) {
    throw BandLimitError("field band limit " + std::to_string(field.band_limit()) +
                         " exceeds frame band limit " + std::to_string(L_));
  }
}

HarmonicField SampledFrame::element(int j, std::size_t k) const {
  const SampledScale& s = scale(j);
  if (k >= s.layout.size()) throw ParameterError("element index out of range");
  const std::vector<double> y = real_harmonics(L_, s.layout.node(k));
  const double root_w = std::sqrt(s.layout.weight(k));
  HarmonicField out(L_);
  for (int l = 0; l <= L_; ++l) {
    const double f = root_w * s.multiplier[static_cast<std::size_t>(l)];
    for (int q = -l; q <= l; ++q) out(l, q) = f * y[sh_index(l, q)];
  }
  return out;
}

FrameCoefficients SampledFrame::analyze(const HarmonicField& field) const {
  check_field(field);
  const auto nq = static_cast<std::size_t>(L_ + 1);
  LegendreTable table(L_);
  std::vector<double> c(nq), s(nq), cq(nq), sq(nq);
  FrameCoefficients out;
  out.reserve(scales_.size());
  for (const SampledScale& scale : scales_) {
    ScaleCoefficients sc{scale.j, {}};
    sc.values.reserve(scale.layout.size());
    for (const Ring& ring : scale.layout.rings()) {
      table.compute(std::cos(ring.theta), std::sin(ring.theta));
      ring_fourier(table, field, scale.multiplier, c, s);
      const double root_w = std::sqrt(ring.weight);
      for (int n = 0; n < ring.count; ++n) {
        trig_table(ring.phi0 + kTwoPi * n / ring.count, cq, sq);
        sc.values.push_back(root_w * trig_eval(c, s, cq, sq));
      }
    }
    out.push_back(std::move(sc));
  }
  return out;
}

std::vector<double> SampledFrame::energies(std::span<const HarmonicField> fields,
                                           const FrameSelection& selection) const {
  for (const auto& f : fields) check_field(f);
  const auto nq = static_cast<std::size_t>(L_ + 1);
  LegendreTable table(L_);
  std::vector<double> c(nq), s(nq), cq(nq), sq(nq);
  std::vector<char> kept;
  std::vector<double> out(fields.size(), 0.0);

  for (const SampledScale& scale : scales_) {
    if (!selection.includes_scale(scale.j)) continue;
    for (const Ring& ring : scale.layout.rings()) {
      const RingMode mode = classify_ring(ring, scale.j, L_, selection, direct_only_, kept);
      if (mode == RingMode::skip) continue;
      table.compute(std::cos(ring.theta), std::sin(ring.theta));
      for (std::size_t f = 0; f < fields.size(); ++f) {
        ring_fourier(table, fields[f], scale.multiplier, c, s);
        double e = 0.0;
        if (mode == RingMode::fast) {
          double sq_sum = 0.0;
          for (std::size_t q = 1; q < nq; ++q) sq_sum += c[q] * c[q] + s[q] * s[q];
          e = ring.count * (c[0] * c[0] + 0.5 * sq_sum);
        } else {
          for (int n = 0; n < ring.count; ++n) {
            if (!kept[static_cast<std::size_t>(n)]) continue;
            trig_table(ring.phi0 + kTwoPi * n / ring.count, cq, sq);
            const double g = trig_eval(c, s, cq, sq);
            e += g * g;
          }
        }
        out[f] += ring.weight * e;
      }
    }
  }
  return out;
}

double SampledFrame::energy(const HarmonicField& field, const FrameSelection& selection) const {
  return energies(std::span<const HarmonicField>(&field, 1), selection).front();
}

HarmonicField SampledFrame::apply(const HarmonicField& field,
                                  const FrameSelection& selection) const {
  check_field(field);
  const auto nq = static_cast<std::size_t>(L_ + 1);
  LegendreTable table(L_);
  std::vector<double> c(nq), s(nq), cq(nq), sq(nq), tc(nq), ts(nq);
  std::vector<char> kept;
  HarmonicField out(L_);

  for (const SampledScale& scale : scales_) {
    if (!selection.includes_scale(scale.j)) continue;
    for (const Ring& ring : scale.layout.rings()) {
      const RingMode mode = classify_ring(ring, scale.j, L_, selection, direct_only_, kept);
      if (mode == RingMode::skip) continue;
      table.compute(std::cos(ring.theta), std::sin(ring.theta));
      ring_fourier(table, field, scale.multiplier, c, s);
      if (mode == RingMode::fast) {
        const double half = 0.5 * ring.count * ring.weight;
        tc[0] = ring.count * ring.weight * c[0];
        ts[0] = 0.0;
        for (std::size_t q = 1; q < nq; ++q) {
          tc[q] = half * c[q];
          ts[q] = half * s[q];
        }
      } else {
        std::fill(tc.begin(), tc.end(), 0.0);
        std::fill(ts.begin(), ts.end(), 0.0);
        for (int n = 0; n < ring.count; ++n) {
          if (!kept[static_cast<std::size_t>(n)]) continue;
          trig_table(ring.phi0 + kTwoPi * n / ring.count, cq, sq);
          const double wg = ring.weight * trig_eval(c, s, cq, sq);
          for (std::size_t q = 0; q < nq; ++q) {
            tc[q] += wg * cq[q];
            ts[q] += wg * sq[q];
          }
        }
      }
      ring_adjoint(table, scale.multiplier, tc, ts, out);
    }
  }
  return out;
}

HarmonicField SampledFrame::synthesize(int j, std::span<const double> coefficients) const {
  const SampledScale& sc = scale(j);
  if (coefficients.size() != sc.layout.size()) {
    throw ParameterError("coefficient count does not match the scale");
  }
  const auto nq = static_cast<std::size_t>(L_ + 1);
  LegendreTable table(L_);
  std::vector<double> cq(nq), sq(nq), tc(nq), ts(nq);
  HarmonicField out(L_);
  std::size_t k = 0;
  for (const Ring& ring : sc.layout.rings()) {
    table.compute(std::cos(ring.theta), std::sin(ring.theta));
    std::fill(tc.begin(), tc.end(), 0.0);
    std::fill(ts.begin(), ts.end(), 0.0);
    const double root_w = std::sqrt(ring.weight);
    for (int n = 0; n < ring.count; ++n, ++k) {
      trig_table(ring.phi0 + kTwoPi * n / ring.count, cq, sq);
      const double v = root_w * coefficients[k];
      for (std::size_t q = 0; q < nq; ++q) {
        tc[q] += v * cq[q];
        ts[q] += v * sq[q];
      }
    }
    ring_adjoint(table, sc.multiplier, tc, ts, out);
  }
  return out;
}

}  // namespace mexneedlet
