// Writes the bundled synthetic Gaussian-mode fixture. All fields are exact
// analytic Gaussians (see tests/support/fixtures.cpp), so the mode volumes,
// effective mass and coupling integrals computed from the files have closed
// forms. Run from the repository root:
//   gen_gaussian_fixture data/fixtures
#include <cstdio>
#include <string>

#include "../tests/support/fixtures.hpp"
#include "spinomech/modefields/fields.hpp"

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data/fixtures";
  const auto data = spinomech::testsupport::gaussian_fixture();
  spinomech::modefields::write_volume_export(dir + "/gaussian_volume.csv",
                                             data);
  spinomech::modefields::write_surface_export(dir + "/gaussian_surface.csv",
                                              data);
  std::printf("wrote %zu volume and %zu surface samples under %s\n",
              data.volume.size(), data.surface.size(), dir.c_str());
  return 0;
}
