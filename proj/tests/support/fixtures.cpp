#include "fixtures.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include "spinomech/constants.hpp"

namespace spinomech::testsupport {

using modefields::ModeFieldData;
using modefields::SurfaceSample;
using modefields::VolumeSample;

ModeFieldData gaussian_fixture(const GaussianFixtureParams& p) {
  ModeFieldData data;
  data.omega_a = two_pi * p.omega_a_hz;
  data.omega_m = two_pi * p.omega_m_hz;

  const double span = 5.0 * p.sigma;
  const double hx = 2 * span / (p.nx - 1), hy = 2 * span / (p.ny - 1),
               hz = 2 * span / (p.nz - 1);
  const double dv = hx * hy * hz;
  data.volume.reserve(size_t(p.nx) * size_t(p.ny) * size_t(p.nz));
  for (int i = 0; i < p.nx; ++i)
    for (int j = 0; j < p.ny; ++j)
      for (int k = 0; k < p.nz; ++k) {
        VolumeSample s;
        s.position = {-span + i * hx, -span + j * hy, -span + k * hz};
        const double r2 = s.position.squaredNorm();
        const double amp = std::exp(-r2 / (4.0 * p.sigma * p.sigma));
        s.weight = dv;
        s.displacement = modefields::Vector3c(p.q0 * amp, 0, 0);
        s.strain = Eigen::Matrix3d::Zero();
        s.strain(2, 2) = p.s0 * amp;
        s.e_field = modefields::Vector3c(p.e0 * amp, 0, 0);
        s.eps_rel = p.eps_rel;
        s.density = p.density;
        data.volume.push_back(std::move(s));
      }

  // surface patch on the z = +3 sigma plane, Gaussian in-plane profile
  const int ns = int(std::lround(std::sqrt(double(p.n_surface))));
  const double hs = 2 * span / ns;
  const double z0 = 3.0 * p.sigma;
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      SurfaceSample s;
      s.position = {-span + (i + 0.5) * hs, -span + (j + 0.5) * hs, z0};
      const double r2 = s.position.squaredNorm();
      const double amp = std::exp(-r2 / (4.0 * p.sigma * p.sigma));
      s.weight = hs * hs;
      s.normal = {0, 0, 1};
      s.displacement = modefields::Vector3c(0, 0, 0.3 * p.q0 * amp);
      s.e_parallel = modefields::Vector3c(0.2 * p.e0 * amp, 0, 0);
      s.d_perp = modefields::Vector3c(
          0, 0, vacuum_permittivity * p.eps_rel * 0.5 * p.e0 * amp);
      s.delta_eps = p.eps_rel - 1.0;
      s.delta_inv_eps = 1.0 / p.eps_rel - 1.0;
      data.surface.push_back(std::move(s));
    }
  return data;
}

ModeFieldData plane_wave_fixture(double strain_s, double q0, int n_samples) {
  ModeFieldData data;
  data.omega_a = two_pi * 197.5e12;
  data.omega_m = two_pi * 5.34e9;
  data.volume.reserve(size_t(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    VolumeSample s;
    s.position = {double(i), 0, 0};
    s.weight = 1e-21;
    s.displacement = modefields::Vector3c(0, 0, q0);
    s.strain = Eigen::Matrix3d::Zero();
    s.strain(0, 0) = strain_s;
    s.e_field = modefields::Vector3c(1e6, 0, 0);
    s.eps_rel = 1.0;
    s.density = 3515;
    data.volume.push_back(std::move(s));
  }
  return data;
}

ModeFieldData facet_fixture(const FacetFixtureParams& p) {
  ModeFieldData data;
  data.omega_a = two_pi * 197.5e12;
  data.omega_m = two_pi * 5.34e9;
  for (int i = 0; i < p.n_volume; ++i) {
    VolumeSample s;
    s.position = {double(i), 0, 0};
    s.weight = p.volume / p.n_volume;
    s.displacement = modefields::Vector3c(0, 0, 0.5 * p.q0);  // below the facet peak
    s.strain = Eigen::Matrix3d::Zero();
    s.e_field = modefields::Vector3c(p.e0, 0, 0);
    s.eps_rel = p.eps_rel;
    s.density = 3515;
    data.volume.push_back(std::move(s));
  }
  SurfaceSample s;
  s.position = {0, 0, 1e-7};
  s.weight = p.area;
  s.normal = {0, 0, 1};
  s.displacement = modefields::Vector3c(0, 0, p.q0);
  s.e_parallel = modefields::Vector3c(p.e_par, 0, 0);
  s.d_perp = modefields::Vector3c(0, 0, p.d_perp);
  s.delta_eps = p.delta_eps;
  s.delta_inv_eps = p.delta_inv_eps;
  data.surface.push_back(std::move(s));
  return data;
}

std::uint64_t field_data_checksum(const ModeFieldData& data) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&](const char* buf) {
    for (const char* c = buf; *c; ++c) {
      h ^= std::uint64_t(*c);
      h *= 1099511628211ull;
    }
  };
  char buf[64];
  auto mixd = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g;", v);
    mix(buf);
  };
  mixd(data.omega_a);
  mixd(data.omega_m);
  for (const auto& s : data.volume) {
    for (int i = 0; i < 3; ++i) mixd(s.position(i));
    mixd(s.weight);
    for (int i = 0; i < 3; ++i) {
      mixd(s.displacement(i).real());
      mixd(s.displacement(i).imag());
      mixd(s.e_field(i).real());
      mixd(s.e_field(i).imag());
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) mixd(s.strain(i, j));
    mixd(s.eps_rel);
    mixd(s.density);
  }
  for (const auto& s : data.surface) {
    mixd(s.weight);
    for (int i = 0; i < 3; ++i) mixd(s.normal(i));
    mixd(s.delta_eps);
    mixd(s.delta_inv_eps);
  }
  return h;
}

}  // namespace spinomech::testsupport
