#include "harmtile/count.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace harmtile {

CountBreakdown count_breakdown(int width, int height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("rectangle sides must be nonzero integers, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    const int m = width + 1, n = height + 1;
    CountBreakdown b;
    b.width = width;
    b.height = height;
    b.c = std::gcd(m + 1, n + 1) - 1;
    KernelDims dims = kernel_dims_closed_form(m, n);
    b.beta = dims.beta;
    b.omega = dims.omega;
    b.count = (BigCount(1) << b.beta) + (BigCount(1) << b.omega) - 2;
    return b;
}

BigCount count_tilings(int width, int height) { return count_breakdown(width, height).count; }

std::vector<PolarizedVector> kernel_basis(int width, int height, Color polarity,
                                          KernelMethod method) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("rectangle sides must be nonzero integers, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    GridGraph g(width + 1, height + 1);
    switch (method) {
        case KernelMethod::Elimination: return kernel_basis_elimination(g, polarity);
        case KernelMethod::Transfer: return kernel_basis_transfer(g, polarity);
        case KernelMethod::Structured: return kernel_basis_structured(g, polarity);
    }
    throw std::logic_error("unknown kernel method");
}

namespace {

// All nonzero combinations of the basis, ascending by coefficient mask.
std::vector<PolarizedVector> enumerate_kernel(const GridGraph& g, Color polarity, int dim_cap,
                                              int other_dim) {
    std::vector<PolarizedVector> basis = kernel_basis_elimination(g, polarity);
    const int dim = static_cast<int>(basis.size());
    if (dim > dim_cap || other_dim > dim_cap) {
        KernelDims dims = kernel_dims_closed_form(g.m(), g.n());
        throw CapExceeded(dims.beta, dims.omega, dim_cap);
    }
    std::vector<PolarizedVector> vectors;
    vectors.reserve((1ul << dim) - 1);
    for (unsigned long mask = 1; mask < (1ul << dim); ++mask) {
        PolarizedVector u(g.m(), g.n(), polarity);
        for (int i = 0; i < dim; ++i)
            if (mask & (1ul << i)) u ^= basis[i];
        vectors.push_back(std::move(u));
    }
    return vectors;
}

}  // namespace

std::vector<Tiling> enumerate_tilings(int width, int height, int dim_cap) {
    CountBreakdown b = count_breakdown(width, height);
    GridGraph g(width + 1, height + 1);

    std::vector<Tiling> tilings;
    for (Color polarity : {Color::White, Color::Black}) {
        int other = (polarity == Color::White) ? b.beta : b.omega;
        for (const PolarizedVector& u : enumerate_kernel(g, polarity, dim_cap, other))
            tilings.push_back(phi(u));
    }
    return tilings;
}

namespace {

using Checker = void (*)(const VerifyOptions&, CheckResult&);

void record_failure(CheckResult& result, const std::string& detail) {
    if (result.ok) {
        result.ok = false;
        result.detail = detail;
    }
}

std::string pair_str(int w, int h) { return std::to_string(w) + "x" + std::to_string(h); }

void check_dims_vs_elimination(const VerifyOptions& options, CheckResult& result) {
    for (int w = 1; w <= options.max_side; ++w) {
        for (int h = w; h <= options.max_side; ++h) {
            GridGraph g(w + 1, h + 1);
            KernelDims expected = kernel_dims_closed_form(g.m(), g.n());
            gf2::Gf2Matrix bw = g.build_bw();
            gf2::Gf2Matrix wb = g.build_wb();
            int beta = static_cast<int>(bw.cols() - gf2::rank(bw));
            int omega = static_cast<int>(wb.cols() - gf2::rank(wb));
            ++result.cases;
            if (beta != expected.beta || omega != expected.omega)
                record_failure(result, "rectangle " + pair_str(w, h) + ": closed form (" +
                                           std::to_string(expected.beta) + "," +
                                           std::to_string(expected.omega) + ") vs elimination (" +
                                           std::to_string(beta) + "," + std::to_string(omega) +
                                           ")");
        }
    }
}

void check_square_dims_law(const VerifyOptions& options, CheckResult& result) {
    for (int c = 1; c <= options.max_side + 1; ++c) {
        KernelDims dims = square_kernel_dims_elimination(c);
        ++result.cases;
        if (2 * dims.beta != c + c % 2 || 2 * dims.omega != c - c % 2)
            record_failure(result, "square c=" + std::to_string(c) + ": elimination gives (" +
                                       std::to_string(dims.beta) + "," +
                                       std::to_string(dims.omega) + ")");
    }
}

void check_method_agreement(const VerifyOptions& options, CheckResult& result) {
    for (int w = 1; w <= options.max_side; ++w) {
        for (int h = w; h <= options.max_side; ++h) {
            GridGraph g(w + 1, h + 1);
            for (Color polarity : {Color::Black, Color::White}) {
                auto elim = kernel_basis_elimination(g, polarity);
                auto transfer = kernel_basis_transfer(g, polarity);
                auto structured = kernel_basis_structured(g, polarity);

                std::vector<gf2::Gf2Vector> e, tr, st;
                for (const auto& v : elim) e.push_back(v.to_compact());
                for (const auto& v : transfer) tr.push_back(v.to_compact());
                for (const auto& v : structured) st.push_back(v.to_compact());
                std::size_t len = g.num_for(polarity);

                ++result.cases;
                if (!gf2::same_span(e, tr, len))
                    record_failure(result, "rectangle " + pair_str(w, h) +
                                               ": transfer span differs from elimination");
                else if (!gf2::same_span(e, st, len))
                    record_failure(result, "rectangle " + pair_str(w, h) +
                                               ": structured span differs from elimination");
                else if (elim.size() != transfer.size() || elim.size() != structured.size())
                    record_failure(result,
                                   "rectangle " + pair_str(w, h) + ": basis sizes disagree");
            }
        }
    }
}

void check_symmetry_suite(const VerifyOptions& options, CheckResult& result) {
    for (int w = 1; w <= options.max_side; ++w) {
        for (int h = w; h <= options.max_side; ++h) {
            GridGraph g(w + 1, h + 1);
            for (Color polarity : {Color::Black, Color::White}) {
                std::vector<PolarizedVector> vectors = kernel_basis_elimination(g, polarity);
                for (auto& v : kernel_basis_transfer(g, polarity)) vectors.push_back(std::move(v));
                for (auto& v : kernel_basis_structured(g, polarity))
                    vectors.push_back(std::move(v));
                for (const PolarizedVector& v : vectors) {
                    ++result.cases;
                    if (!is_harmonic(v)) {
                        record_failure(result, "rectangle " + pair_str(w, h) +
                                                   ": basis vector with nonzero residual");
                        continue;
                    }
                    SymmetryReport sym = check_symmetries(v);
                    if (!sym.all_ok()) {
                        Point p = sym.violations().front();
                        record_failure(result,
                                       "rectangle " + pair_str(w, h) + ": symmetry violated at (" +
                                           std::to_string(p.x) + "," + std::to_string(p.y) + ")");
                    }
                }
            }
        }
    }
}

void check_bijection_roundtrip(const VerifyOptions& options, CheckResult& result) {
    int side = std::min(options.max_side, options.bijection_max_side);
    for (int w = 1; w <= side; ++w) {
        for (int h = w; h <= side; ++h) {
            CountBreakdown expected = count_breakdown(w, h);
            if (expected.beta > options.bijection_dim_cap ||
                expected.omega > options.bijection_dim_cap)
                continue;
            GridGraph g(w + 1, h + 1);
            BigCount total = 0;
            for (Color polarity : {Color::White, Color::Black}) {
                BijectionReport report =
                    verify_bijection(g, polarity, options.bijection_dim_cap);
                ++result.cases;
                if (!report.ok) {
                    record_failure(result, "rectangle " + pair_str(w, h) + ": " +
                                               report.failures.front());
                    continue;
                }
                total += report.distinct_tilings;
            }
            if (total != expected.count)
                record_failure(result, "rectangle " + pair_str(w, h) + ": enumerated " +
                                           total.str() + " tilings, closed form says " +
                                           expected.count.str());
        }
    }
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& options) {
    VerifyReport report;

    const std::pair<std::string, Checker> checks[] = {
        {"closed-form-dims-vs-elimination", check_dims_vs_elimination},
        {"square-dims-law", check_square_dims_law},
        {"method-agreement", check_method_agreement},
        {"symmetry-suite", check_symmetry_suite},
        {"bijection-roundtrip", check_bijection_roundtrip},
    };

    for (const auto& [name, checker] : checks) {
        if (options.dims_only && name != "closed-form-dims-vs-elimination" &&
            name != "square-dims-law")
            continue;
        CheckResult result;
        result.name = name;
        checker(options, result);
        report.checks.push_back(result);
        report.ok = report.ok && result.ok;
    }
    return report;
}

}  // namespace harmtile
