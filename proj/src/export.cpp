#include "mexneedlet/export.hpp"

#include <charconv>
#include <cmath>

#include "mexneedlet/error.hpp"

namespace mexneedlet {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_kernel_csv(std::ostream& os, const KernelProfile& profile) {
  os << "theta,value,method,t,filter\n";
  const std::string t = format_number(profile.t);
  for (std::size_t i = 0; i < profile.thetas.size(); ++i) {
    os << format_number(profile.thetas[i]) << ',' << format_number(profile.values[i]) << ','
       << method_name(profile.methods[i]) << ',' << t << ',' << profile.filter << '\n';
  }
}

void write_partition_json(std::ostream& os, const ScalePartition& partition, double a, double b) {
  os << "{\"j\":" << partition.j() << ",\"a\":" << format_number(a)
     << ",\"b\":" << format_number(b) << ",\"cells\":[";
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const Cell c = partition.cell(k);
    if (k > 0) os << ',';
    os << "{\"center\":[" << format_number(c.center.x) << ',' << format_number(c.center.y) << ','
       << format_number(c.center.z) << "],\"measure\":" << format_number(c.measure)
       << ",\"diameter_bound\":" << format_number(c.diameter_bound) << '}';
  }
  os << "]}\n";
}

void write_cubature_csv(std::ostream& os, const CubatureRule& rule) {
  os << "x,y,z,weight\n";
  for (std::size_t i = 0; i < rule.layout.size(); ++i) {
    const Vec3 x = rule.layout.node(i);
    os << format_number(x.x) << ',' << format_number(x.y) << ',' << format_number(x.z) << ','
       << format_number(rule.layout.weight(i)) << '\n';
  }
}

void write_coefficients_csv(std::ostream& os, const SampledFrame& frame,
                            const FrameCoefficients& coefficients) {
  os << "j,k,center_x,center_y,center_z,measure,coefficient\n";
  for (const ScaleCoefficients& sc : coefficients) {
    const RingLayout& layout = frame.scale(sc.j).layout;
    if (sc.values.size() != layout.size()) {
      throw ParameterError("coefficient count does not match the scale");
    }
    for (std::size_t k = 0; k < sc.values.size(); ++k) {
      const Vec3 x = layout.node(k);
      os << sc.j << ',' << k << ',' << format_number(x.x) << ',' << format_number(x.y) << ','
         << format_number(x.z) << ',' << format_number(layout.weight(k)) << ','
         << format_number(sc.values[k]) << '\n';
    }
  }
}

void write_field_csv(std::ostream& os, const HarmonicField& field) {
  os << "l,q,coeff\n";
  for (int l = 0; l <= field.band_limit(); ++l) {
    for (int q = -l; q <= l; ++q) os << l << ',' << q << ',' << format_number(field(l, q)) << '\n';
  }
}

}  // namespace mexneedlet
