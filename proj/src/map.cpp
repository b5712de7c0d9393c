#include "padyn/map.hpp"

#include "padyn/errors.hpp"

namespace padyn {

const char* to_cstring(CaseTag t) {
    switch (t) {
        case CaseTag::UniqueFixed: return "unique-fixed";
        case CaseTag::NoFixed: return "no-fixed";
        case CaseTag::Identity: return "identity";
        case CaseTag::TwoFixed: return "two-fixed";
    }
    return "?";
}

const char* to_cstring(LocalType t) {
    switch (t) {
        case LocalType::Attracting: return "attracting";
        case LocalType::Indifferent: return "indifferent";
        case LocalType::Repelling: return "repelling";
    }
    return "?";
}

namespace {

ContextPtr context_for_params(Prime p, std::initializer_list<const ExactElement*> xs) {
    Rat d(0);
    for (const ExactElement* x : xs)
        if (!x->is_rational()) {
            if (d != 0 && d != x->radicand())
                throw ExtensionTowerError("parameters mix two radicands");
            d = x->radicand();
        }
    if (d == 0) return std::make_shared<PadicContext>(p);
    return std::make_shared<PadicContext>(p, d);
}

LocalType local_type_of(const Radius& multiplier_norm) {
    const Radius one = Radius::one();
    if (multiplier_norm < one) return LocalType::Attracting;
    if (multiplier_norm == one) return LocalType::Indifferent;
    return LocalType::Repelling;
}

// sqrt of an analysis radicand that may itself live in Q(sqrt(D)):
// (u + v sqrt(D))^2 = s reduces to two rational square tests.
ResolvedSqrt resolve_sqrt_element(const ContextPtr& ctx, const ExactElement& s) {
    if (s.is_rational()) return resolve_sqrt(ctx, s.as_rational());
    const Rat& dd = s.radicand();
    const Rat sa = s.rational_part(), sb = s.radical_part();
    if (auto w = rational_sqrt(sa * sa - dd * sb * sb)) {
        for (const Rat& ww : {*w, Rat(-*w)}) {
            if (auto u = rational_sqrt((sa + ww) / 2)) {
                if (*u != 0) {
                    const Rat v = sb / (2 * *u);
                    ExactElement root = ExactElement::make(*u, v, dd);
                    return {root, ctx};
                }
            }
        }
    }
    throw ExtensionTowerError("sqrt(" + s.str() + ") is outside Q(sqrt(" + to_string(dd) + "))");
}

}  // namespace

RationalMap::RationalMap(Prime p, ExactElement a, ExactElement b, ExactElement c, ExactElement d)
    : p_(p), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (c_.is_zero()) throw InvalidParamsError("c must be nonzero");
    inv_ = d_ * d_ - a_ * c_ * d_ + b_ * c_ * c_;
    if (inv_.is_zero()) throw InvalidParamsError("d^2 - acd + bc^2 must be nonzero");
    pole_ = -(d_ / c_);
    ctx_ = context_for_params(p_, {&a_, &b_, &c_, &d_});
}

CaseTag RationalMap::classify() const {
    const ExactElement one(1);
    if (c_ != one) return CaseTag::TwoFixed;
    if (a_ != d_) return CaseTag::UniqueFixed;
    return b_.is_zero() ? CaseTag::Identity : CaseTag::NoFixed;
}

ExactElement RationalMap::apply(const ExactElement& x) const {
    const ExactElement den = c_ * x + d_;
    if (den.is_zero()) throw PoleError(pole_.str());
    return (x * x + a_ * x + b_) / den;
}

ExactElement RationalMap::derivative(const ExactElement& x, long n) const {
    if (n < 1) throw Error("derivative order must be >= 1");
    const ExactElement shifted = x + d_ / c_;
    if (shifted.is_zero()) throw PoleError(pole_.str());
    const ExactElement c3 = c_.pow(3);
    if (n == 1) return (c_ * c_ - inv_ / (shifted * shifted)) / c3;
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    const Rat sign_fact = (n % 2 == 0) ? Rat(fact) : Rat(-fact);
    return sign_fact * inv_ / (c3 * shifted.pow(n + 1));
}

std::string RationalMap::str() const {
    return "(x^2 + (" + a_.str() + ")x + (" + b_.str() + ")) / ((" + c_.str() + ")x + (" + d_.str() +
           ")), p = " + std::to_string(p_.value());
}

ExactElement alpha_of(const RationalMap& map, const ExactElement& x) {
    const ExactElement den = map.c() * x + map.d();
    if (den.is_zero()) throw PoleError(map.pole().str());
    return (map.c() * x * x + Rat(2) * map.d() * x + map.a() * map.d() - map.b() * map.c()) / den;
}

ExactElement beta_of(const RationalMap& map, const ExactElement& x) {
    return (map.c() * x + map.d()) / map.c();
}

std::vector<ExactElement> MapAnalysis::anchors() const {
    std::vector<ExactElement> out;
    for (const auto& fp : fixed_points) out.push_back(fp.point);
    if (cycle) {
        out.push_back(cycle->t1);
        out.push_back(cycle->t2);
    }
    return out;
}

MapAnalysis analyze(const RationalMap& map) {
    MapAnalysis an;
    an.tag = map.classify();
    an.ctx = map.base_context();

    switch (an.tag) {
        case CaseTag::Identity:
            break;

        case CaseTag::UniqueFixed: {
            const ExactElement x0 = map.b() / (map.d() - map.a());
            if (map.apply(x0) != x0) throw Error("internal: unique fixed point does not verify");
            // Dual route: the closed-form multiplier must agree with f'(x0).
            const ExactElement lam =
                (map.a() * map.d() + map.b() - map.a() * map.a()) / map.discriminant_invariant();
            if (lam != map.derivative(x0)) throw Error("internal: multiplier routes disagree");
            FixedPointInfo fp;
            fp.point = x0;
            fp.multiplier = lam;
            fp.multiplier_norm = an.ctx->norm(lam);
            fp.local_type = local_type_of(fp.multiplier_norm);
            fp.delta = an.ctx->norm(x0 + map.d());
            an.fixed_points.push_back(std::move(fp));
            break;
        }

        case CaseTag::NoFixed: {
            auto rs = resolve_sqrt_element(an.ctx, -(map.b()) / Rat(2));
            an.ctx = rs.ctx;
            TwoCycleInfo tc;
            tc.t1 = -map.a() + rs.root;
            tc.t2 = -map.a() - rs.root;
            if (map.apply(tc.t1) != tc.t2 || map.apply(tc.t2) != tc.t1)
                throw Error("internal: 2-cycle does not verify");
            tc.h = an.ctx->norm(tc.t1 + map.a());
            tc.g_multiplier = map.derivative(tc.t1) * map.derivative(tc.t2);
            if (tc.g_multiplier != ExactElement(9))
                throw Error("internal: cycle multiplier is not 9");
            tc.g_multiplier_norm = an.ctx->norm(tc.g_multiplier);
            an.cycle = std::move(tc);
            break;
        }

        case CaseTag::TwoFixed: {
            const ExactElement one(1);
            const ExactElement delta_el =
                (map.a() - map.d()) * (map.a() - map.d()) + Rat(4) * (map.c() - one) * map.b();
            std::vector<ExactElement> roots;
            if (delta_el.is_zero()) {
                roots.push_back(ExactElement(0));  // double fixed point
            } else {
                auto rs = resolve_sqrt_element(an.ctx, delta_el);
                an.ctx = rs.ctx;
                roots.push_back(rs.root);
                roots.push_back(-rs.root);
            }
            for (const ExactElement& r : roots) {
                const ExactElement xi = (map.a() - map.d() + r) / (Rat(2) * (map.c() - one));
                if (map.apply(xi) != xi) throw Error("internal: fixed point does not verify");
                FixedPointInfo fp;
                fp.point = xi;
                fp.multiplier = map.derivative(xi);
                fp.multiplier_norm = an.ctx->norm(fp.multiplier);
                fp.local_type = local_type_of(fp.multiplier_norm);
                fp.alpha = an.ctx->norm(alpha_of(map, xi));
                fp.beta = an.ctx->norm(beta_of(map, xi));
                an.fixed_points.push_back(std::move(fp));
            }
            break;
        }
    }
    return an;
}

LocalGeometry local_geometry(const RationalMap& map, const MapAnalysis& an, size_t i,
                             const ExactElement& x) {
    if (i >= an.fixed_points.size()) throw Error("fixed point index out of range");
    const FixedPointInfo& fp = an.fixed_points[i];
    if (!fp.alpha || !fp.beta) throw Error("local geometry needs the two-fixed case");

    LocalGeometry g;
    g.alpha = *fp.alpha;
    g.beta = *fp.beta;

    const ExactElement gamma = x - fp.point;
    const Radius r = an.ctx->norm(gamma);
    const ExactElement a_el = alpha_of(map, fp.point);
    const ExactElement b_el = beta_of(map, fp.point);
    const Radius ratio_num = an.ctx->norm(a_el + gamma);
    const Radius ratio_den = an.ctx->norm(b_el + gamma);

    // Exact distance identity |f(x) - x_i| = (r/|c|) |alpha+γ|/|beta+γ|.
    const Radius lhs = an.ctx->norm(map.apply(x) - fp.point);
    const Radius rhs = r / an.ctx->norm(map.c()) * ratio_num / ratio_den;
    if (lhs != rhs) throw Error("internal: sphere-image identity failed");

    if (r == *fp.alpha) g.alpha_star = r * ratio_num / ratio_den;
    if (r == *fp.beta) g.beta_star = r * ratio_num / ratio_den;
    if (!g.alpha_star && !g.beta_star)
        throw Error("point is on neither the alpha nor the beta sphere");
    return g;
}

TaylorRadii taylor_radii(const RationalMap& map, const MapAnalysis& an, const FixedPointInfo& fp) {
    const Radius L = fp.multiplier_norm;
    const Radius one = Radius::one();
    const Radius delta_c = an.ctx->norm(fp.point + map.d() / map.c());
    const Radius A =
        an.ctx->norm(map.discriminant_invariant()) / (an.ctx->norm(map.c()).pow(3) * delta_c.pow(2));

    TaylorRadii out;
    if (L < one) {
        if (A < one) {
            out.attracting_radius = delta_c;
            out.attracting_attained = true;
        } else if (A == one) {
            out.attracting_radius = delta_c;
        } else {
            out.attracting_radius = delta_c / A;
        }
    } else {
        out.attracting_radius = Radius::zero();
    }
    if (L.is_zero()) {
        out.siegel_radius = Radius::zero();
    } else if (A < L) {
        out.siegel_radius = delta_c;
        out.siegel_attained = true;
    } else if (A == L) {
        out.siegel_radius = delta_c;
    } else {
        out.siegel_radius = L * delta_c / A;
    }
    return out;
}

TruncatedMap::TruncatedMap(const RationalMap& map, const ContextPtr& ctx, long digits)
    : a_(ctx, map.a(), digits),
      b_(ctx, map.b(), digits),
      c_(ctx, map.c(), digits),
      d_(ctx, map.d(), digits) {}

TruncatedExt TruncatedMap::apply(const TruncatedExt& x) const {
    return (x * x + a_ * x + b_) / (c_ * x + d_);
}

}  // namespace padyn
