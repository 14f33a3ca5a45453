#include "tcg/spectral.hpp"
#include "tcg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace tcg {

SymmetricIntMatrix SymmetricIntMatrix::adjacency(const CoprimeGraph& g) {
    SymmetricIntMatrix m;
    m.order = static_cast<int>(g.order());
    m.entries.assign(std::size_t(m.order) * m.order, 0);
    for (std::uint32_t u = 1; u <= g.order(); ++u)
        for (std::uint32_t v : g.neighbors(u))
            m.at(static_cast<int>(u) - 1, static_cast<int>(v) - 1) = 1;
    return m;
}

SymmetricIntMatrix SymmetricIntMatrix::shifted(std::int64_t lambda) const {
    SymmetricIntMatrix m = *this;
    for (int i = 0; i < order; ++i)
        m.at(i, i) -= lambda;
    return m;
}

bool SymmetricIntMatrix::is_symmetric() const {
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

bool SymmetricIntMatrix::rows_identical(int i, int j) const {
    for (int k = 0; k < order; ++k)
        if (at(i, k) != at(j, k))
            return false;
    return true;
}

std::int64_t SymmetricIntMatrix::trace() const {
    std::int64_t t = 0;
    for (int i = 0; i < order; ++i)
        t += at(i, i);
    return t;
}

namespace {

double frobenius(const std::vector<double>& a) {
    double s = 0;
    for (double x : a)
        s += x * x;
    return std::sqrt(s);
}

double offdiag_frobenius(const std::vector<double>& a, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                s += a[std::size_t(i) * n + j] * a[std::size_t(i) * n + j];
    return std::sqrt(s);
}

double offdiag_l1(const std::vector<double>& a, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            s += std::fabs(a[std::size_t(i) * n + j]);
    return s;
}

struct Rotation {
    double c = 1.0, s = 0.0;
};

// Angle annihilating a_pq, in the numerically stable form.
Rotation make_rotation(double app, double aqq, double apq) {
    double theta = (aqq - app) / (2.0 * apq);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    Rotation r;
    r.c = 1.0 / std::sqrt(t * t + 1.0);
    r.s = t * r.c;
    return r;
}

void apply_rotation_rows(std::vector<double>& a, int n, int p, int q, Rotation r) {
    double* rp = a.data() + std::size_t(p) * n;
    double* rq = a.data() + std::size_t(q) * n;
    for (int k = 0; k < n; ++k) {
        double x = rp[k], y = rq[k];
        rp[k] = r.c * x - r.s * y;
        rq[k] = r.s * x + r.c * y;
    }
}

void apply_rotation_cols(std::vector<double>& a, int n, int p, int q, Rotation r) {
    for (int k = 0; k < n; ++k) {
        double x = a[std::size_t(k) * n + p], y = a[std::size_t(k) * n + q];
        a[std::size_t(k) * n + p] = r.c * x - r.s * y;
        a[std::size_t(k) * n + q] = r.s * x + r.c * y;
    }
}

std::vector<double> sorted_diagonal(const std::vector<double>& a, int n) {
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i)
        vals[i] = a[std::size_t(i) * n + i];
    std::sort(vals.begin(), vals.end());
    return vals;
}

} // namespace

std::vector<double> jacobi_eigenvalues_cyclic(std::vector<double> a, int n,
                                              const JacobiOptions& opt) {
    if (n <= 1)
        return sorted_diagonal(a, n);
    const double scale = frobenius(a);
    if (scale == 0.0)
        return sorted_diagonal(a, n);
    double off = offdiag_frobenius(a, n);
    for (int sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
        if (off <= opt.rel_tol * scale)
            return sorted_diagonal(a, n);
        // Threshold pivoting: early sweeps skip entries that are small
        // relative to the remaining off-diagonal mass.
        double tresh = sweep <= 3 ? 0.2 * offdiag_l1(a, n) / (double(n) * n) : 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a[std::size_t(p) * n + q];
                if (std::fabs(apq) <= tresh || apq == 0.0)
                    continue;
                Rotation r = make_rotation(a[std::size_t(p) * n + p],
                                           a[std::size_t(q) * n + q], apq);
                apply_rotation_rows(a, n, p, q, r);
                apply_rotation_cols(a, n, p, q, r);
                a[std::size_t(p) * n + q] = 0.0;
                a[std::size_t(q) * n + p] = 0.0;
            }
        off = offdiag_frobenius(a, n);
    }
    if (off <= opt.rel_tol * scale)
        return sorted_diagonal(a, n);
    throw JacobiError("jacobi: no convergence after " + std::to_string(opt.max_sweeps) +
                          " sweeps, off-diagonal residual " + std::to_string(off),
                      off);
}

std::vector<double> jacobi_eigenvalues_rounds(std::vector<double> a, int n,
                                              const JacobiOptions& opt) {
    if (n <= 1)
        return sorted_diagonal(a, n);
    const double scale = frobenius(a);
    if (scale == 0.0)
        return sorted_diagonal(a, n);

    // Round-robin tournament schedule: N slots (N even), N-1 rounds pairing
    // every index pair exactly once per sweep. Pairs within a round are
    // disjoint, so their rotations commute and can be applied in parallel.
    const int slots = (n % 2 == 0) ? n : n + 1;
    std::vector<int> ring(slots - 1);
    for (int i = 0; i < slots - 1; ++i)
        ring[i] = i + 1;

    std::vector<int> ps, qs;
    std::vector<Rotation> rots;
    double off = offdiag_frobenius(a, n);
    for (int sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
        if (off <= opt.rel_tol * scale)
            return sorted_diagonal(a, n);
        double tresh = sweep <= 3 ? 0.2 * offdiag_l1(a, n) / (double(n) * n) : 0.0;
        for (int round = 0; round < slots - 1; ++round) {
            ps.clear();
            qs.clear();
            rots.clear();
            for (int k = 0; k < slots / 2; ++k) {
                int u = (k == 0) ? 0 : ring[k - 1];
                int v = ring[slots - 2 - k];
                if (u >= n || v >= n)
                    continue; // padding slot for odd n
                int p = std::min(u, v), q = std::max(u, v);
                double apq = a[std::size_t(p) * n + q];
                if (std::fabs(apq) <= tresh || apq == 0.0)
                    continue;
                ps.push_back(p);
                qs.push_back(q);
                rots.push_back(make_rotation(a[std::size_t(p) * n + p],
                                             a[std::size_t(q) * n + q], apq));
            }
            const std::int64_t cnt = static_cast<std::int64_t>(ps.size());
#pragma omp parallel for if (n >= 96)
            for (std::int64_t i = 0; i < cnt; ++i)
                apply_rotation_rows(a, n, ps[i], qs[i], rots[i]);
#pragma omp parallel for if (n >= 96)
            for (std::int64_t i = 0; i < cnt; ++i)
                apply_rotation_cols(a, n, ps[i], qs[i], rots[i]);
            for (std::int64_t i = 0; i < cnt; ++i) {
                a[std::size_t(ps[i]) * n + qs[i]] = 0.0;
                a[std::size_t(qs[i]) * n + ps[i]] = 0.0;
            }
            std::rotate(ring.begin(), ring.end() - 1, ring.end());
        }
        off = offdiag_frobenius(a, n);
    }
    if (off <= opt.rel_tol * scale)
        return sorted_diagonal(a, n);
    throw JacobiError("jacobi: no convergence after " + std::to_string(opt.max_sweeps) +
                          " sweeps, off-diagonal residual " + std::to_string(off),
                      off);
}

Spectrum make_spectrum(std::vector<double> values, double cluster_tol) {
    std::sort(values.begin(), values.end());
    Spectrum s;
    s.cluster_tol = cluster_tol;
    s.values = std::move(values);
    std::size_t i = 0;
    while (i < s.values.size()) {
        std::size_t j = i + 1;
        while (j < s.values.size() && s.values[j] - s.values[j - 1] <= cluster_tol)
            ++j;
        double mean = 0;
        for (std::size_t k = i; k < j; ++k)
            mean += s.values[k];
        mean /= double(j - i);
        s.clusters.push_back({mean, static_cast<int>(j - i)});
        i = j;
    }
    return s;
}

Spectrum eigenvalues(const SymmetricIntMatrix& m, double rel_tol, double cluster_tol) {
    if (m.order < 1)
        throw std::invalid_argument("eigenvalues: empty matrix");
    if (!m.is_symmetric())
        throw std::invalid_argument("eigenvalues: matrix is not symmetric");
    std::vector<double> a(m.entries.begin(), m.entries.end());
    JacobiOptions opt;
    opt.rel_tol = rel_tol;
    std::vector<double> vals = m.order >= 128 ? jacobi_eigenvalues_rounds(std::move(a), m.order, opt)
                                              : jacobi_eigenvalues_cyclic(std::move(a), m.order, opt);
    return make_spectrum(std::move(vals), cluster_tol);
}

int multiplicity_near(const Spectrum& s, double lambda, double tol) {
    if (tol <= 0)
        throw std::invalid_argument("multiplicity_near: tol must be positive");
    int count = 0;
    for (double v : s.values)
        if (std::fabs(v - lambda) <= tol)
            ++count;
    return count;
}

double spectral_radius(const Spectrum& s) {
    if (s.values.empty())
        throw std::invalid_argument("spectral_radius: empty spectrum");
    return s.values.back();
}

std::string spectrum_csv_row(int n, const Spectrum& s) {
    std::string row = std::to_string(n);
    char buf[32];
    for (double v : s.values) {
        double r = std::round(v * 1e4) / 1e4;
        if (r == 0.0)
            r = 0.0; // avoid "-0.0000"
        std::snprintf(buf, sizeof buf, ",%.4f", r);
        row += buf;
    }
    return row;
}

nlohmann::ordered_json spectrum_json(const Spectrum& s) {
    nlohmann::ordered_json j;
    j["values"] = s.values;
    j["clusters"] = nlohmann::ordered_json::array();
    for (const Cluster& c : s.clusters)
        j["clusters"].push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
    j["cluster_tol"] = s.cluster_tol;
    return j;
}

} // namespace tcg
