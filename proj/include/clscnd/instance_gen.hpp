#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "clscnd/instance.hpp"

namespace clscnd {

// Deterministic, portable random stream: a std::mt19937_64 engine (whose
// output sequence is fixed by the C++ standard) with explicit bit-level
// conversion to doubles, so the stream is reproducible across platforms
// and languages that implement the same engine.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 random mantissa bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double next_real(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Uniform integer in [lo, hi], both ends included.
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_unit() * (static_cast<double>(hi) - lo + 1.0));
    }

  private:
    std::mt19937_64 engine_;
};

struct Range {
    double lo = 0.0, hi = 0.0;
};

struct IntRange {
    int lo = 0, hi = 0;
};

// Per-mode transport rates: cost in dollars per short-ton-mile, CO2 in grams
// per tonne-kilometre, and worker risk exposure per product-mile for the
// four risk categories.
struct ModeRates {
    std::string name;
    double cost_per_ton_mile = 0.0;
    double co2_g_per_tonne_km = 0.0;
    double risk_accident = 0.0;
    double risk_psychosocial = 0.0;
    double risk_physical = 0.0;
    double risk_mental = 0.0;
};

// rail, road, air
std::vector<ModeRates> default_mode_rates();

struct GenConfig {
    std::uint64_t seed = 1;
    EchelonSizes sizes;

    IntRange demand_range{100, 150};  // products per year, integer draw

    Range cap_manufacturing{800.0, 1200.0};
    Range cap_remanufacturing{80.0, 120.0};
    Range cap_dc_forward{400.0, 600.0};
    Range cap_dc_reverse{80.0, 120.0};
    Range cap_recycle{160.0, 240.0};
    Range cap_disposal{160.0, 240.0};

    Range fixed_cost_plant{400000.0, 600000.0};
    Range fixed_cost_dc{250000.0, 350000.0};
    Range fixed_cost_recycle{150000.0, 250000.0};
    Range fixed_cost_disposal{150000.0, 250000.0};

    Range emission_plant{4000.0, 8000.0};
    Range emission_dc{3000.0, 5000.0};
    Range emission_recycle{2000.0, 4000.0};
    Range emission_disposal{2000.0, 4000.0};

    // mode t uses mode_rates[t % mode_rates.size()]
    std::vector<ModeRates> mode_rates = default_mode_rates();

    // accident, psychosocial, physical, mental overload per opened facility
    Eigen::Vector4d facility_risk_plant{3.0, 6.0, 6.0, 4.0};
    Eigen::Vector4d facility_risk_dc{2.0, 4.0, 4.0, 3.0};
    Eigen::Vector4d facility_risk_recycle{2.0, 4.0, 4.0, 3.0};
    Eigen::Vector4d facility_risk_disposal{2.0, 4.0, 4.0, 3.0};

    Eigen::Vector4d risk_weights{0.4, 0.2, 0.2, 0.2};
    double return_fraction = 0.2;
    double reuse_fraction = 0.4;
    double recycle_fraction = 0.3;

    double product_mass_kg = 50.0;
    double region_side_miles = 500.0;
    double inflation_factor = 1.0;  // multiplier applied to the built-in cost rates

    void validate() const;  // throws std::invalid_argument
};

// Kilograms per short ton and kilometres per mile, used by the per-product
// conversions below.
inline constexpr double kKgPerTon = 907.185;
inline constexpr double kKmPerMile = 1.60934;

// Per-product transport cost for one arc:
//   rate ($/ton-mile) * inflation * (mass_kg / 907.185) * distance_miles
double transport_cost_per_product(double rate_per_ton_mile, double inflation_factor,
                                  double product_mass_kg, double distance_miles);

// Per-product transport emission for one arc:
//   rate (g/tonne-km) * (mass_kg / 1000) * distance_miles * 1.60934
double transport_emission_per_product(double co2_g_per_tonne_km, double product_mass_kg,
                                      double distance_miles);

// Draws one instance from the seeded stream. Stream order, documented for
// reimplementation: placement (plants, centers, customers, recyclers,
// disposals; x then y per site) -> demands -> fixed costs (plant, center,
// recycle, disposal blocks) -> emissions (same block order) -> capacities
// (manufacturing, remanufacturing, center forward, center reverse, recycle,
// disposal blocks). Arc data is computed from geometry, not drawn.
Instance generate(const GenConfig& config);

// The benchmark configuration: sizes (5 plants, 8 centers, 20 customers,
// 3 recyclers, 3 disposals), 3 modes, default table data.
GenConfig benchmark_config(std::uint64_t seed);
Instance benchmark_instance(std::uint64_t seed);

}  // namespace clscnd
