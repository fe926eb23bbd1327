// Copyright 2026 The idwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "idwalk/walk.hpp"

#include <cmath>
#include <string>

#include "idwalk/error.hpp"

namespace idwalk {

WalkModel WalkModel::conditional_hop(double t, Boundary boundary, double theta) {
    WalkModel m{WalkKind::ConditionalHop, t, theta, boundary};
    m.validate();
    return m;
}

WalkModel WalkModel::split_step(double theta) {
    WalkModel m{WalkKind::SplitStep, 0.0, theta, Boundary::Periodic};
    m.validate();
    return m;
}

void WalkModel::validate() const {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw ValidationError("hopping amplitude t must be finite and >= 0");
    }
    if (!(theta >= 0.0 && theta < 2 * std::numbers::pi)) {
        throw ValidationError("coin angle theta must lie in [0, 2pi)");
    }
    if (kind == WalkKind::SplitStep && boundary != Boundary::Periodic) {
        throw ConfigurationError("the split-step walk is only defined with periodic boundaries");
    }
}

ChainPropagator build_chain_propagator(int L, double t, Boundary boundary) {
    if (L < 1) throw ValidationError("chain length must be >= 1");
    if (!(t >= 0.0)) throw ValidationError("hopping amplitude must be >= 0");
    ChainPropagator p{L, t, boundary, CMatrix(L, L)};
    const double pi = std::numbers::pi;
    if (boundary == Boundary::Open) {
        // Sine eigenbasis of the open chain, energies 2t·cos(mπ/(L+1)).
        const double norm = 2.0 / (L + 1);
        for (int m = 1; m <= L; ++m) {
            const double k = m * pi / (L + 1);
            const cplx phase = std::polar(1.0, -2.0 * t * std::cos(k));
            for (int x = 0; x < L; ++x) {
                const double sx = std::sin(k * (x + 1));
                for (int xp = 0; xp < L; ++xp) {
                    p.K(x, xp) += phase * (norm * sx * std::sin(k * (xp + 1)));
                }
            }
        }
    } else {
        // Plane waves, energies 2t·cos(2πn/L). K depends on x − x' only.
        std::vector<cplx> row(L);
        for (int d = 0; d < L; ++d) {
            cplx s = 0.0;
            for (int n = 0; n < L; ++n) {
                const double k = 2.0 * pi * n / L;
                s += std::polar(1.0, -2.0 * t * std::cos(k) + k * d);
            }
            row[d] = s / static_cast<double>(L);
        }
        for (int x = 0; x < L; ++x)
            for (int xp = 0; xp < L; ++xp) p.K(x, xp) = row[((x - xp) % L + L) % L];
    }
    return p;
}

SpinorField apply_coin(const SpinorField& field, double theta) {
    SpinorField out(field.spec());
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (std::size_t i = 0; i < field.size(); i += 2) {
        const cplx up = field[i];
        const cplx dn = field[i + 1];
        out[i] = c * up + s * dn;
        out[i + 1] = s * up - c * dn;
    }
    return out;
}

namespace {

void check_propagator(const LatticeSpec& spec, const ChainPropagator& k) {
    if (k.L != spec.L || k.boundary != spec.boundary) {
        throw DimensionError("chain propagator built for L=" + std::to_string(k.L) +
                             " does not match the field's lattice (L=" +
                             std::to_string(spec.L) + ")");
    }
}

// Up sector: rows along x; Down sector: columns along y.
void shift_sectors(std::span<cplx> a, int L, const CMatrix& kx, const CMatrix& ky,
                   std::vector<cplx>& in, std::vector<cplx>& out) {
    const auto idx = [L](int x, int y, int s) {
        return (static_cast<std::size_t>(y) * L + x) * 2 + s;
    };
    for (int y = 0; y < L; ++y) {
        for (int x = 0; x < L; ++x) in[x] = a[idx(x, y, 0)];
        for (int x = 0; x < L; ++x) {
            cplx s = 0.0;
            const auto row = kx.row(x);
            for (int xp = 0; xp < L; ++xp) s += row[xp] * in[xp];
            out[x] = s;
        }
        for (int x = 0; x < L; ++x) a[idx(x, y, 0)] = out[x];
    }
    for (int x = 0; x < L; ++x) {
        for (int y = 0; y < L; ++y) in[y] = a[idx(x, y, 1)];
        for (int y = 0; y < L; ++y) {
            cplx s = 0.0;
            const auto row = ky.row(y);
            for (int yp = 0; yp < L; ++yp) s += row[yp] * in[yp];
            out[y] = s;
        }
        for (int y = 0; y < L; ++y) a[idx(x, y, 1)] = out[y];
    }
}

void translate(std::span<cplx> a, int L, Axis axis) {
    std::vector<cplx> old(a.begin(), a.end());
    for (int y = 0; y < L; ++y) {
        for (int x = 0; x < L; ++x) {
            const std::size_t src = (static_cast<std::size_t>(y) * L + x) * 2;
            int xu = x, yu = y, xd = x, yd = y;
            if (axis == Axis::X) {
                xu = (x + 1) % L;
                xd = (x - 1 + L) % L;
            } else {
                yu = (y + 1) % L;
                yd = (y - 1 + L) % L;
            }
            a[(static_cast<std::size_t>(yu) * L + xu) * 2] = old[src];
            a[(static_cast<std::size_t>(yd) * L + xd) * 2 + 1] = old[src + 1];
        }
    }
}

}  // namespace

SpinorField apply_conditional_shift(const SpinorField& field, const ChainPropagator& kx,
                                    const ChainPropagator& ky) {
    check_propagator(field.spec(), kx);
    check_propagator(field.spec(), ky);
    SpinorField out = field;
    const int L = field.spec().L;
    std::vector<cplx> in(L), tmp(L);
    shift_sectors(out.amplitudes(), L, kx.K, ky.K, in, tmp);
    return out;
}

SpinorField split_shift(const SpinorField& field, Axis axis) {
    if (field.spec().boundary != Boundary::Periodic) {
        throw ConfigurationError("split shift requires a periodic lattice");
    }
    SpinorField out = field;
    translate(out.amplitudes(), field.spec().L, axis);
    return out;
}

StepOperator::StepOperator(int L, const WalkModel& model)
    : spec_(L, model.boundary),
      model_(model),
      cos_theta_(std::cos(model.theta)),
      sin_theta_(std::sin(model.theta)) {
    model_.validate();
    if (model_.kind == WalkKind::ConditionalHop) {
        chain_ = build_chain_propagator(L, model_.t, model_.boundary);
    }
}

void StepOperator::coin_in_place(SpinorField& f) const {
    auto a = f.amplitudes();
    for (std::size_t i = 0; i < a.size(); i += 2) {
        const cplx up = a[i];
        const cplx dn = a[i + 1];
        a[i] = cos_theta_ * up + sin_theta_ * dn;
        a[i + 1] = sin_theta_ * up - cos_theta_ * dn;
    }
}

void StepOperator::conditional_shift_in_place(SpinorField& f) const {
    std::vector<cplx> in(spec_.L), out(spec_.L);
    shift_sectors(f.amplitudes(), spec_.L, chain_.K, chain_.K, in, out);
}

void StepOperator::split_shift_in_place(SpinorField& f, Axis axis) const {
    translate(f.amplitudes(), spec_.L, axis);
}

void StepOperator::apply_in_place(SpinorField& field) const {
    if (!(field.spec() == spec_)) {
        throw DimensionError("field lattice does not match the step operator");
    }
    if (model_.kind == WalkKind::ConditionalHop) {
        coin_in_place(field);
        conditional_shift_in_place(field);
    } else {
        coin_in_place(field);
        split_shift_in_place(field, Axis::X);
        coin_in_place(field);
        split_shift_in_place(field, Axis::Y);
    }
}

SpinorField StepOperator::apply(const SpinorField& field) const {
    SpinorField out = field;
    apply_in_place(out);
    return out;
}

SpinorField step(const SpinorField& field, const WalkModel& model) {
    if (field.spec().boundary != model.boundary) {
        throw ConfigurationError("field boundary does not match the walk model");
    }
    return StepOperator(field.spec().L, model).apply(field);
}

PropagatedSet propagate_set(const IdenticalEnsemble& ensemble, int L, const WalkModel& model,
                            int n) {
    if (n < 0) throw ValidationError("step count must be >= 0");
    const StepOperator op(L, model);
    ensemble.check_fits(op.spec());
    PropagatedSet set{{}, 0, model, ensemble};
    set.fields.reserve(ensemble.labels().size());
    for (const BasisLabel& l : ensemble.labels()) set.fields.push_back(basis_state(op.spec(), l));
    for (int i = 0; i < n; ++i) advance(set, op);
    return set;
}

void advance(PropagatedSet& set, const StepOperator& op) {
    for (SpinorField& f : set.fields) op.apply_in_place(f);
    ++set.n;
}

double gram_defect(const PropagatedSet& set) {
    double m = 0.0;
    for (int a = 0; a < set.size(); ++a)
        for (int b = a; b < set.size(); ++b) {
            const cplx g = inner(set.fields[a], set.fields[b]);
            m = std::max(m, std::abs(g - cplx(a == b ? 1.0 : 0.0)));
        }
    return m;
}

double edge_probability(const PropagatedSet& set) {
    const int L = set.spec().L;
    double total = 0.0;
    for (const SpinorField& f : set.fields) {
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                if (x != 0 && y != 0 && x != L - 1 && y != L - 1) continue;
                const std::size_t i = site_index(f.spec(), x, y) * 2;
                total += std::norm(f[i]) + std::norm(f[i + 1]);
            }
    }
    return total / set.size();
}

}  // namespace idwalk
