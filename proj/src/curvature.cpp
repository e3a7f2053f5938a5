#include "lamarle/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lamarle/error.hpp"

namespace lamarle {

FirstFundamentalForm first_forms(const RuledSurface& surface, double u, double v) {
    const SurfacePartials p = partials(surface, u, v);
    return {metric(p.phi_u, p.phi_u), metric(p.phi_u, p.phi_v), metric(p.phi_v, p.phi_v)};
}

SecondFundamentalForm second_forms(const RuledSurface& surface, double u, double v) {
    const SurfacePartials p = partials(surface, u, v);
    const LVec3 eta = unit_normal(surface, u, v).eta;
    return {metric(p.phi_uu, eta), metric(p.phi_uv, eta), metric(p.phi_vv, eta)};
}

FundamentalForms fundamental_forms(const RuledSurface& surface, double u, double v) {
    return {first_forms(surface, u, v), second_forms(surface, u, v)};
}

double gaussian_curvature(const FundamentalForms& f) {
    const auto& [E, F, G] = f.first;
    const auto& [L, N, M] = f.second;
    const double det = E * G - F * F;
    const double scale = std::max(1.0, std::abs(E * G) + F * F);
    if (std::abs(det) <= 1e-12 * scale) {
        throw Error(ErrorCode::DegenerateMetric, "induced metric is degenerate (EG - F^2 = " + std::to_string(det) + ")");
    }
    return (L * M - N * N) / det;
}

double gaussian_curvature_forms(const RuledSurface& surface, double u, double v) {
    return gaussian_curvature(fundamental_forms(surface, u, v));
}

double lamarle_curvature(SurfaceClass cls, double P, double v) {
    if (P == 0.0 && v == 0.0) {
        throw Error(ErrorCode::IndeterminateAtOrigin, "closed form is indeterminate at P = v = 0");
    }
    const double p2 = P * P;
    const double v2 = v * v;
    switch (cls) {
        case SurfaceClass::M2_TimelikeSpacelikeBaseTimelikeRuling: {
            const double d = p2 + v2;
            return p2 / (d * d);
        }
        case SurfaceClass::M1_Spacelike:
        case SurfaceClass::M3_TimelikeTimelikeBaseSpacelikeRuling: {
            if (std::abs(v) >= std::abs(P)) {
                throw Error(ErrorCode::OutsideDomain,
                            "closed form requires |v| < |P| (v = " + std::to_string(v) + ", P = " + std::to_string(P) + ")");
            }
            const double d = p2 - v2;
            const double k = p2 / (d * d);
            return cls == SurfaceClass::M1_Spacelike ? -k : k;
        }
    }
    return 0.0;
}

std::vector<LamarleReport> verify_lamarle(const RuledSurface& surface, int nu, int nv) {
    nu = std::max(nu, 2);
    nv = std::max(nv, 2);
    const SurfaceClass cls = causal_class(surface, surface.u_range().midpoint());
    const Interval vr = valid_v_range(surface, cls, std::max(nu, 101));

    std::vector<LamarleReport> reports;
    reports.reserve(static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv));
    for (int i = 0; i < nu; ++i) {
        const double u = surface.u_range().sample(i, nu);
        for (int j = 0; j < nv; ++j) {
            const double v = vr.sample(j, nv);
            LamarleReport r{cls, u, v, std::nan(""), std::nan(""), std::nan(""), std::nan(""),
                            std::nan(""), std::nan(""), "ok", ""};
            try {
                r.surface_class = classify(surface, u, v);
                const StrictionSample s = striction_sample(surface, u);
                r.P = det3(s.beta_prime, s.e.point, s.e.d1) / metric(s.e.d1, s.e.d1);
                r.v_striction = s.offset + v * s.director_norm;
                r.K_forms = gaussian_curvature_forms(surface, u, v);
                r.K_lamarle = lamarle_curvature(r.surface_class, r.P, r.v_striction);
                r.abs_diff = std::abs(r.K_forms - r.K_lamarle);
                const double denom = std::max(std::abs(r.K_forms), std::abs(r.K_lamarle));
                r.rel_diff = denom > 0.0 ? r.abs_diff / denom : 0.0;
            } catch (const Error& e) {
                r.status = std::string(error_code_name(e.code()));
                r.message = e.what();
            }
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

VerifySummary summarize(const std::vector<LamarleReport>& reports) {
    VerifySummary s;
    s.points = reports.size();
    for (const LamarleReport& r : reports) {
        if (!r.ok()) continue;
        ++s.ok_points;
        s.max_abs_diff = std::max(s.max_abs_diff, r.abs_diff);
        s.max_rel_diff = std::max(s.max_rel_diff, r.rel_diff);
        s.max_scaled_diff = std::max(s.max_scaled_diff, r.abs_diff / std::max(1.0, std::abs(r.K_forms)));
    }
    return s;
}

bool within_tolerance(const VerifySummary& summary, double tolerance) {
    return summary.ok_points > 0 && summary.max_scaled_diff <= tolerance;
}

}  // namespace lamarle
