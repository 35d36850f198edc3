#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace oracle {

std::vector<double> jacobi_eigenvalues(Eigen::MatrixXcd a) {
    const Eigen::Index n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                if (i != j) off += std::norm(a(i, j));
        if (off < 1e-30) break;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const std::complex<double> apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                // Unitary rotation in the (p, q) plane zeroing a(p, q).
                const std::complex<double> phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2 * mag, aqq - app);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                for (Eigen::Index k = 0; k < n; ++k) {
                    const std::complex<double> akp = a(k, p);
                    const std::complex<double> akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const std::complex<double> apk = a(p, k);
                    const std::complex<double> aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev;
    for (Eigen::Index i = 0; i < n; ++i) ev.push_back(a(i, i).real());
    std::sort(ev.begin(), ev.end());
    return ev;
}

namespace {

struct Rule {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss–Legendre nodes on [0, 1] by Newton iteration on P_n.
Rule gauss_legendre(int n) {
    Rule r;
    for (int i = 1; i <= n; ++i) {
        double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1);
            const double step = p1 / dp;
            z -= step;
            if (std::abs(step) < 1e-16) break;
        }
        r.x.push_back(0.5 * (1 - z));
        r.w.push_back(1.0 / ((1 - z * z) * dp * dp));
    }
    return r;
}

}  // namespace

std::complex<double> quadrature_inner_product(const ingham::LatticeSpec& spec, const ingham::TranslationConfig& config,
                                              const ingham::LatticePoint& p, const ingham::LatticePoint& q, int nodes,
                                              int pieces) {
    const double two_pi = 2 * std::numbers::pi;
    const Eigen::Matrix2d ls{{spec.l_star_numeric()[0][0], spec.l_star_numeric()[0][1]},
                             {spec.l_star_numeric()[1][0], spec.l_star_numeric()[1][1]}};
    const Eigen::Matrix2d l_inv = ls.transpose().inverse();
    auto point = [&](const ingham::LatticePoint& t) {
        Eigen::Vector2d y(spec.us[t.j][0].to_double() + static_cast<double>(t.m[0]),
                          spec.us[t.j][1].to_double() + static_cast<double>(t.m[1]));
        return Eigen::Vector2d(ls * y);
    };
    const Eigen::Vector2d delta = point(p) - point(q);
    const Rule rule = gauss_legendre(nodes);
    const double jac = std::abs(l_inv.determinant()) * (two_pi / pieces) * (two_pi / pieces);
    std::complex<double> total = 0;
    for (const ingham::IVec2& n : config.ns)
        for (int a = 0; a < pieces; ++a)
            for (int b = 0; b < pieces; ++b)
                for (std::size_t i = 0; i < rule.x.size(); ++i)
                    for (std::size_t k = 0; k < rule.x.size(); ++k) {
                        const Eigen::Vector2d s(two_pi * (static_cast<double>(n[0]) + (a + rule.x[i]) / pieces),
                                                two_pi * (static_cast<double>(n[1]) + (b + rule.x[k]) / pieces));
                        const Eigen::Vector2d x = l_inv * s;
                        total += rule.w[i] * rule.w[k] * std::polar(1.0, delta.dot(x));
                    }
    return total * jac;
}

namespace {

bool connected(const std::vector<std::pair<int, int>>& cells) {
    std::vector<bool> seen(cells.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto [x, y] = cells[stack.back()];
        stack.pop_back();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (!seen[i] && std::abs(cells[i].first - x) + std::abs(cells[i].second - y) == 1) {
                seen[i] = true;
                ++count;
                stack.push_back(i);
            }
    }
    return count == cells.size();
}

}  // namespace

std::size_t brute_force_polyomino_count(int n) {
    // Every fixed n-omino fits in an n×n box once pushed against both axes.
    const int cells = n * n;
    std::size_t count = 0;
    std::vector<int> pick(static_cast<std::size_t>(n));
    std::vector<bool> mask(static_cast<std::size_t>(cells), false);
    std::fill(mask.begin(), mask.begin() + n, true);
    std::sort(mask.begin(), mask.end());
    do {
        std::vector<std::pair<int, int>> shape;
        for (int i = 0; i < cells; ++i)
            if (mask[static_cast<std::size_t>(i)]) shape.push_back({i / n, i % n});
        int min_x = n, min_y = n;
        for (const auto& [x, y] : shape) {
            min_x = std::min(min_x, x);
            min_y = std::min(min_y, y);
        }
        // Count each shape once: only its placement touching both axes.
        if (min_x == 0 && min_y == 0 && connected(shape)) ++count;
    } while (std::next_permutation(mask.begin(), mask.end()));
    return count;
}

std::size_t brute_force_class_count(const std::vector<ingham::TranslationConfig>& configs) {
    auto same_class = [](const ingham::TranslationConfig& a, const ingham::TranslationConfig& b) {
        if (a.ns.size() != b.ns.size()) return false;
        std::set<ingham::IVec2> sb(b.ns.begin(), b.ns.end());
        // b = a + t for t taken from the first point of a to any point of b.
        for (const ingham::IVec2& target : b.ns) {
            const std::int64_t dx = target[0] - a.ns[0][0];
            const std::int64_t dy = target[1] - a.ns[0][1];
            bool all = true;
            for (const ingham::IVec2& pt : a.ns)
                if (!sb.contains({pt[0] + dx, pt[1] + dy})) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    };
    std::vector<ingham::TranslationConfig> reps;
    for (const auto& c : configs) {
        bool found = false;
        for (const auto& r : reps)
            if (same_class(c, r)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(c);
    }
    return reps.size();
}

std::complex<double> cofactor_det(const Eigen::MatrixXcd& m) {
    const Eigen::Index n = m.rows();
    if (n == 1) return m(0, 0);
    std::complex<double> det = 0;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::MatrixXcd minor(n - 1, n - 1);
        for (Eigen::Index i = 1; i < n; ++i)
            for (Eigen::Index j = 0, k = 0; j < n; ++j)
                if (j != c) minor(i - 1, k++) = m(i, j);
        det += (c % 2 == 0 ? 1.0 : -1.0) * m(0, c) * cofactor_det(minor);
    }
    return det;
}

}  // namespace oracle
