#pragma once

#include <optional>
#include <vector>

#include "padyn/exact.hpp"

namespace padyn {

// The paper's four-way case split on (c, a-d, b).
enum class CaseTag { UniqueFixed, NoFixed, Identity, TwoFixed };

enum class LocalType { Attracting, Indifferent, Repelling };

const char* to_cstring(CaseTag t);
const char* to_cstring(LocalType t);

// f(x) = (x^2 + a x + b)/(c x + d), c != 0, d^2 - acd + bc^2 != 0.
class RationalMap {
  public:
    RationalMap(Prime p, ExactElement a, ExactElement b, ExactElement c, ExactElement d);

    Prime prime() const { return p_; }
    const ExactElement& a() const { return a_; }
    const ExactElement& b() const { return b_; }
    const ExactElement& c() const { return c_; }
    const ExactElement& d() const { return d_; }
    // x̂ = -d/c; evaluation there is a pole.
    const ExactElement& pole() const { return pole_; }
    // E = d^2 - acd + bc^2, the invariant that keeps the map honestly (2,1).
    const ExactElement& discriminant_invariant() const { return inv_; }
    // Context carrying the radicand of the parameters themselves (usually none).
    const ContextPtr& base_context() const { return ctx_; }

    CaseTag classify() const;

    ExactElement apply(const ExactElement& x) const;
    // n-th derivative; n = 1 and the closed form for n >= 2.
    ExactElement derivative(const ExactElement& x, long n = 1) const;

    std::string str() const;

  private:
    Prime p_;
    ExactElement a_, b_, c_, d_, pole_, inv_;
    ContextPtr ctx_;
};

struct FixedPointInfo {
    ExactElement point;
    ExactElement multiplier;  // f'(point)
    Radius multiplier_norm;
    LocalType local_type;
    std::optional<Radius> delta;  // unique-fixed case: |x0 + d|
    std::optional<Radius> alpha;  // two-fixed case: |alpha(x_i)|
    std::optional<Radius> beta;   // two-fixed case: |beta(x_i)|
};

struct TwoCycleInfo {
    ExactElement t1, t2;          // f(t1) = t2, f(t2) = t1
    Radius h;                     // |t1 + a|
    ExactElement g_multiplier;    // (f∘f)'(t_i); equals 9 for every (a, b)
    Radius g_multiplier_norm;
};

// Case tag plus everything the dynamics needs: fixed points / cycle with
// multipliers and local radii, and the context the solutions live in.
struct MapAnalysis {
    CaseTag tag = CaseTag::Identity;
    ContextPtr ctx;
    std::vector<FixedPointInfo> fixed_points;
    std::optional<TwoCycleInfo> cycle;

    // All anchor points (fixed points, or the 2-cycle).
    std::vector<ExactElement> anchors() const;
};

MapAnalysis analyze(const RationalMap& map);

// alpha(x) = (cx^2 + 2dx + ad - bc)/(cx + d) and beta(x) = (cx + d)/c.
ExactElement alpha_of(const RationalMap& map, const ExactElement& x);
ExactElement beta_of(const RationalMap& map, const ExactElement& x);

// Sphere data at a point near anchor i: the anchor radii, and the
// orbit-resolved breakpoint values alpha*ic/beta* when x sits on the matching
// sphere. Cross-checks the exact distance identity before returning.
struct LocalGeometry {
    Radius alpha;
    Radius beta;
    std::optional<Radius> alpha_star;
    std::optional<Radius> beta_star;
};
LocalGeometry local_geometry(const RationalMap& map, const MapAnalysis& an, size_t i,
                             const ExactElement& x);

// Largest radii certified by the n-th derivative maxima: the attraction
// criterion (max over n >= 1 < 1) and the Siegel criterion
// (max over n >= 2 < |f'(x0)|). Both maxima telescope geometrically.
struct TaylorRadii {
    Radius attracting_radius;  // sup r with q(r) < 1; zero if none
    bool attracting_attained = false;
    Radius siegel_radius;  // sup r with s(r) < |f'(x0)|; zero if none
    bool siegel_attained = false;
};
TaylorRadii taylor_radii(const RationalMap& map, const MapAnalysis& an, const FixedPointInfo& fp);

// Map step in the truncated backend (parameters embedded once).
class TruncatedMap {
  public:
    TruncatedMap(const RationalMap& map, const ContextPtr& ctx, long digits);
    // (x^2 + ax + b)/(cx + d); a tracked-zero denominator raises PrecisionError.
    TruncatedExt apply(const TruncatedExt& x) const;

  private:
    TruncatedExt a_, b_, c_, d_;
};

}  // namespace padyn
