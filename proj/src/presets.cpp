#include "superrad/cli/presets.hpp"

#include "superrad/errors.hpp"

namespace superrad::cli {

namespace {

// M = 2.001, Q = 2, q = 1, m = 0.1, l = 0.
RnModel reference_black_hole() { return RnModel{BlackHole(2.001, 2.0), FieldParams{1.0, 0.1, 0}}; }

// Zero-frequency Gaussian e^{-x^2} moving left, on [-5, 5].
RunConfig boundary_test(const std::string& name, double V, double P, double T) {
  RunConfig c;
  c.name = name;
  c.sim.model = UniformModel{V, P};
  c.sim.grid = Grid::make(-5.0, 5.0, 0.04, 0.04);
  c.sim.final_time = T;
  c.sim.data = DataSpec{DataKind::wave_packet, 0.0, 0.0, 1.0, PhaseConvention::unscaled, false};
  c.sim.snapshot_stride = 5;
  c.sweep = SweepSpec{SweepAxis::boundary, {"transparent", "reference", "dirichlet"}};
  return c;
}

RunConfig toy_sweep(const std::string& name, double T, HeadlineGain headline) {
  RunConfig c;
  c.name = name;
  c.sim.model = ToyModel{ToyParams{1.0, 0.0, 0.0}};
  c.sim.grid = Grid::make(-30.0, 30.0, 0.04, 0.04);
  c.sim.final_time = T;
  c.sim.data = DataSpec{DataKind::wave_packet, 0.0, 7.5, 1.0, PhaseConvention::unscaled, true};
  c.sim.probes = {20.0};
  c.sim.snapshot_stride = 25;
  c.headline = headline;
  c.output.x_stride = 5;
  c.sweep = SweepSpec{SweepAxis::width, {"0", "0.5", "1", "2"}};
  return c;
}

RunConfig rn_small_domain(const std::string& name, DataKind kind, double omega, double h) {
  RunConfig c;
  c.name = name;
  c.sim.model = reference_black_hole();
  c.sim.grid = Grid::make(-50.0, 50.0, h, h);
  c.sim.final_time = 150.0;
  c.sim.data = DataSpec{kind, omega, -37.5, 5.0, PhaseConvention::scaled, false};
  c.sim.probes = {1.0, 10.0};
  c.sim.snapshot_stride = static_cast<std::size_t>(0.5 / h + 0.5);
  c.output.x_stride = static_cast<std::size_t>(0.2 / h + 0.5);
  return c;
}

std::vector<Preset> build() {
  std::vector<Preset> out;
  out.push_back({"fig1-3", "free wave V = P = 0 on [-5,5], T = 10: transparent, enlarged-domain reference, Dirichlet",
                 boundary_test("fig1-3", 0.0, 0.0, 10.0)});
  out.push_back({"fig4-6", "constant V = 1, P = 0 on [-5,5], T = 10: the three boundary modes",
                 boundary_test("fig4-6", 1.0, 0.0, 10.0)});
  out.push_back({"fig7-9", "constant V = 1, P = 0.2 on [-5,5], T = 30, Strang splitting: the three boundary modes",
                 boundary_test("fig7-9", 1.0, 0.2, 30.0)});
  out.push_back({"fig13-14", "toy model alpha = 1, beta = 0 on [-30,30], T = 40, x0 = 7.5: zone gain for L = 0, 0.5, 1, 2",
                 toy_sweep("fig13-14", 40.0, HeadlineGain::zone)});
  out.push_back({"fig15-16", "same toy runs to T = 120 with the flux gain through x = 20",
                 toy_sweep("fig15-16", 120.0, HeadlineGain::flux)});

  RunConfig wp;
  wp.name = "rn-wavepacket";
  wp.sim.model = reference_black_hole();
  wp.sim.grid = Grid::make(-500.0, 500.0, 0.04, 0.04);
  wp.sim.final_time = 900.0;
  wp.sim.data = DataSpec{DataKind::wave_packet, 2.3, 250.0, 5.0, PhaseConvention::scaled, true};
  wp.sim.probes = {300.0, 280.0, 320.0};
  wp.sim.snapshot_stride = 250;
  wp.output.x_stride = 25;
  wp.sweep = SweepSpec{SweepAxis::omega, {"0", "2.3", "4", "5", "10"}};
  out.push_back({"rn-wavepacket", "Reissner-Nordstrom incoming wave packets on [-500,500], x0 = 250, lambda = 5, probe 300, T = 900",
                 wp});

  out.push_back({"rn-flare", "Reissner-Nordstrom flare on [-50,50], x0 = -37.5, lambda = 5, probe 1, T = 150",
                 rn_small_domain("rn-flare", DataKind::flare, 0.0, 0.04)});

  RunConfig he = rn_small_domain("rn-highenergy", DataKind::oscillating_gaussian, 0.0, 0.01);
  he.sweep = SweepSpec{SweepAxis::omega, {"0", "5", "10", "20", "50", "100"}};
  out.push_back({"rn-highenergy", "oscillating Gaussians in the ergosphere on [-50,50], T = 150, h = dt = 0.01",
                 he});
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build();
  return all;
}

const Preset& find_preset(const std::string& name) {
  for (const Preset& p : presets()) {
    if (p.name == name) {
      return p;
    }
  }
  throw ValidationError("preset", "unknown preset '" + name + "' (see list-presets)");
}

}  // namespace superrad::cli
