#include <clocale>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catch_amalgamated.hpp"
#include "mexneedlet/error.hpp"
#include "mexneedlet/export.hpp"

using namespace mexneedlet;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("format_number round trips", "[export]") {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1e-300, 99.99933078408, 4.0 * std::atan(1.0)}) {
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("kernel CSV", "[export]") {
  const KernelProfile p = kernel_profile(SpectralFilter::mexican(1), 0.3, 11, KernelMethod::series);
  std::ostringstream os;
  write_kernel_csv(os, p);
  const auto ls = lines(os.str());
  REQUIRE(ls.size() == 12);
  CHECK(ls[0] == "theta,value,method,t,filter");
  CHECK(ls[1].find(",series,0.3,mexican:r=1") != std::string::npos);
}

TEST_CASE("partition JSON", "[export]") {
  const ScalePartition p = build_partition(0, 2.0, 1.0);
  std::ostringstream os;
  write_partition_json(os, p, 2.0, 1.0);
  const nlohmann::json j = nlohmann::json::parse(os.str());
  CHECK(j["j"] == 0);
  CHECK(j["a"] == 2.0);
  CHECK(j["b"] == 1.0);
  REQUIRE(j["cells"].size() == p.size());
  double total = 0.0;
  for (const auto& c : j["cells"]) {
    CHECK(c["center"].size() == 3);
    CHECK(c["diameter_bound"].get<double>() <= 1.0);
    total += c["measure"].get<double>();
  }
  CHECK(std::abs(total - kFourPi) < 1e-12);
}

TEST_CASE("cubature CSV", "[export]") {
  const CubatureRule r = cubature_rule(4);
  std::ostringstream os;
  write_cubature_csv(os, r);
  const auto ls = lines(os.str());
  CHECK(ls[0] == "x,y,z,weight");
  CHECK(ls.size() == r.layout.size() + 1);
}

TEST_CASE("coefficient and field CSV", "[export]") {
  const FrameSpec spec = make_frame_spec(SpectralFilter::mexican(1), 2.0, 1.0, 4, ScaleWindow{-1, 0});
  const SampledFrame frame = sampled_frame(spec);
  std::mt19937_64 rng(1);
  const HarmonicField F = random_mean_zero_field(4, rng);
  const FrameCoefficients c = analyze(frame, F);
  std::ostringstream os;
  write_coefficients_csv(os, frame, c);
  const auto ls = lines(os.str());
  CHECK(ls[0] == "j,k,center_x,center_y,center_z,measure,coefficient");
  CHECK(ls.size() == frame.element_count() + 1);
  CHECK(ls[1].rfind("-1,0,", 0) == 0);

  FrameCoefficients bad = c;
  bad[0].values.pop_back();
  std::ostringstream sink;
  CHECK_THROWS_AS(write_coefficients_csv(sink, frame, bad), ParameterError);

  std::ostringstream fs;
  write_field_csv(fs, F);
  const auto fl = lines(fs.str());
  CHECK(fl[0] == "l,q,coeff");
  CHECK(fl.size() == sh_count(4) + 1);
  CHECK(fl[1] == "0,0,0");
}

TEST_CASE("output ignores the global locale", "[export]") {
  const char* old = std::setlocale(LC_ALL, nullptr);
  const std::string saved = old ? old : "C";
  if (std::setlocale(LC_ALL, "de_DE.UTF-8") != nullptr) {
    CHECK(format_number(0.25) == "0.25");
    std::setlocale(LC_ALL, saved.c_str());
  } else {
    SUCCEED("locale not installed");
  }
  CHECK(format_number(0.25) == "0.25");
}
