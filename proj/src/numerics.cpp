#include "scopelab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "scopelab/errors.hpp"

namespace scopelab {

namespace {

// V · diag(g) · V†
ComplexMatrix rebuild(const ComplexMatrix& v, const std::vector<Complex>& g) {
    const std::size_t n = v.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (g[k] == Complex(0.0, 0.0)) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = v(i, k) * g[k];
            if (vik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += vik * std::conj(v(j, k));
        }
    }
    return out;
}

std::vector<std::size_t> full_strides(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
    return s;
}

}  // namespace

EigenResult eigh(const ComplexMatrix& a_in, const Tolerances& tol) {
    if (!a_in.is_square()) throw ValidationError("eigh: matrix is not square");
    const double defect = a_in.hermiticity_defect();
    if (defect > tol.hermiticity) {
        std::ostringstream msg;
        msg << "eigh: input is not Hermitian (relative symmetry defect "
            << defect << " exceeds " << tol.hermiticity << ")";
        throw ValidationError(msg.str());
    }

    const std::size_t n = a_in.rows();
    // Work on the exactly Hermitian average of A and A†.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex(a_in(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (a_in(i, j) + std::conj(a_in(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }

    EigenResult res;
    res.vectors = ComplexMatrix::identity(n);
    const double scale = a.max_abs();
    const double thresh = tol.jacobi_offdiag * scale;

    int sweep = 0;
    if (n > 1 && scale > 0.0) {
        for (; sweep < tol.jacobi_max_sweeps; ++sweep) {
            double off = 0.0;
            for (std::size_t p = 0; p + 1 < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q)
                    off = std::max(off, std::abs(a(p, q)));
            if (off <= thresh) break;

            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const double r = std::abs(a(p, q));
                    if (r <= thresh) continue;

                    // Phase-rotate the (p,q) plane so the pivot is real,
                    // then apply the classical symmetric Jacobi rotation.
                    const Complex u = a(p, q) / r;
                    const double app = a(p, p).real();
                    const double aqq = a(q, q).real();
                    const double tau = (aqq - app) / (2.0 * r);
                    const double t =
                        (tau >= 0.0 ? 1.0 : -1.0) /
                        (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const Complex ubar = std::conj(u);

                    // Columns: A ← A·W with W = [[c, s], [−s·ū, c·ū]].
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex akp = a(k, p);
                        const Complex akq = a(k, q);
                        a(k, p) = c * akp - s * (ubar * akq);
                        a(k, q) = s * akp + c * (ubar * akq);
                    }
                    // Rows: A ← W†·A.
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex apk = a(p, k);
                        const Complex aqk = a(q, k);
                        a(p, k) = c * apk - s * (u * aqk);
                        a(q, k) = s * apk + c * (u * aqk);
                    }
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    // Accumulate the eigenvector basis.
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = res.vectors(k, p);
                        const Complex vkq = res.vectors(k, q);
                        res.vectors(k, p) = c * vkp - s * (ubar * vkq);
                        res.vectors(k, q) = s * vkp + c * (ubar * vkq);
                    }
                }
            }
        }
        if (sweep == tol.jacobi_max_sweeps) {
            double off = 0.0;
            for (std::size_t p = 0; p + 1 < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q)
                    off = std::max(off, std::abs(a(p, q)));
            if (off > thresh)
                throw ConvergenceError(
                    "eigh: Jacobi sweeps exhausted before off-diagonal "
                    "entries reached threshold");
        }
    }
    res.sweeps = sweep;

    res.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.values[i] = a(i, i).real();

    // Sort ascending, carrying eigenvector columns along.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return res.values[x] < res.values[y];
    });
    std::vector<double> sorted_vals(n);
    ComplexMatrix sorted_vecs(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted_vals[k] = res.values[order[k]];
        for (std::size_t i = 0; i < n; ++i)
            sorted_vecs(i, k) = res.vectors(i, order[k]);
    }
    res.values = std::move(sorted_vals);
    res.vectors = std::move(sorted_vecs);
    return res;
}

void orthonormalize_columns(ComplexMatrix& m, std::size_t from) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t j = from; j < cols; ++j) {
        std::vector<Complex> col(rows);
        for (std::size_t i = 0; i < rows; ++i) col[i] = m(i, j);

        auto project_out = [&](std::vector<Complex>& v) {
            for (std::size_t prev = 0; prev < j; ++prev) {
                Complex dot = 0.0;
                for (std::size_t i = 0; i < rows; ++i)
                    dot += std::conj(m(i, prev)) * v[i];
                if (dot == Complex(0.0, 0.0)) continue;
                for (std::size_t i = 0; i < rows; ++i) v[i] -= dot * m(i, prev);
            }
        };
        project_out(col);
        double nrm = std::sqrt(norm2(col));
        if (nrm < 1e-10) {
            // Column vanished: pull a replacement from the standard basis.
            for (std::size_t cand = 0; cand < rows; ++cand) {
                std::vector<Complex> e(rows, Complex(0.0, 0.0));
                e[cand] = 1.0;
                project_out(e);
                const double enrm = std::sqrt(norm2(e));
                if (enrm > 0.5) {
                    col = std::move(e);
                    nrm = enrm;
                    break;
                }
            }
        } else {
            // Second pass for numerical safety.
            project_out(col);
            nrm = std::sqrt(norm2(col));
        }
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = col[i] / nrm;
    }
}

SvdResult svd(const ComplexMatrix& a, const Tolerances& tol) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m == 0 || n == 0) throw ValidationError("svd: empty matrix");

    const EigenResult eig = eigh(a.adjoint() * a, tol);

    SvdResult out;
    out.v = ComplexMatrix(n, n);
    out.u = ComplexMatrix(m, m);
    const std::size_t k = std::min(m, n);
    out.singular_values.resize(k, 0.0);

    // Descending singular order: reverse the ascending eigenvalue order.
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = n - 1 - j;
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = eig.vectors(i, src);
        if (j < k)
            out.singular_values[j] =
                std::sqrt(std::max(eig.values[src], 0.0));
    }

    std::size_t filled = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (out.singular_values[j] <= tol.svd_null) break;
        std::vector<Complex> vj(n);
        for (std::size_t i = 0; i < n; ++i) vj[i] = out.v(i, j);
        std::vector<Complex> uj = a.apply(vj);
        for (std::size_t i = 0; i < m; ++i)
            out.u(i, j) = uj[i] / out.singular_values[j];
        filled = j + 1;
    }
    // Re-orthonormalize the computed block (protects degenerate clusters)
    // and complete the rest of the unitary from the standard basis.
    orthonormalize_columns(out.u, 0);
    if (filled < m) orthonormalize_columns(out.u, filled);
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }

    std::vector<std::size_t> dims;
    auto contribute = [&dims](const ComplexMatrix& f) {
        if (!f.dims().empty())
            dims.insert(dims.end(), f.dims().begin(), f.dims().end());
        else
            dims.push_back(f.rows());
    };
    if (out.rows() == out.cols() && out.rows() > 0) {
        contribute(a);
        contribute(b);
        out.set_dims(std::move(dims));
    }
    return out;
}

std::vector<Complex> tensor_product(const std::vector<Complex>& a,
                                    const std::vector<Complex>& b) {
    std::vector<Complex> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i * b.size() + j] = a[i] * b[j];
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<std::size_t>& keep) {
    if (!rho.is_square())
        throw ValidationError("partial_trace: matrix is not square");
    const auto& dims = rho.dims();
    if (dims.empty())
        throw ValidationError("partial_trace: subsystem dims are not set");

    std::vector<std::size_t> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
        throw ValidationError("partial_trace: duplicate keep index");
    for (std::size_t i : kept)
        if (i >= dims.size())
            throw ValidationError("partial_trace: keep index out of range");

    std::vector<std::size_t> traced;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);

    const auto strides = full_strides(dims);
    auto offsets = [&](const std::vector<std::size_t>& subsys) {
        std::size_t count = 1;
        for (std::size_t i : subsys) count *= dims[i];
        std::vector<std::size_t> offs(count, 0);
        for (std::size_t flat = 0; flat < count; ++flat) {
            std::size_t rem = flat;
            for (std::size_t pos = subsys.size(); pos-- > 0;) {
                const std::size_t d = dims[subsys[pos]];
                offs[flat] += (rem % d) * strides[subsys[pos]];
                rem /= d;
            }
        }
        return offs;
    };
    const auto keep_offs = offsets(kept);
    const auto tr_offs = offsets(traced);

    ComplexMatrix out(keep_offs.size(), keep_offs.size());
    std::vector<std::size_t> kept_dims;
    for (std::size_t i : kept) kept_dims.push_back(dims[i]);
    out.set_dims(std::move(kept_dims));

    for (std::size_t r = 0; r < keep_offs.size(); ++r)
        for (std::size_t c = 0; c < keep_offs.size(); ++c) {
            Complex acc = 0.0;
            for (const std::size_t t : tr_offs)
                acc += rho(keep_offs[r] + t, keep_offs[c] + t);
            out(r, c) = acc;
        }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t party) {
    if (!rho.is_square())
        throw ValidationError("partial_transpose: matrix is not square");
    const auto& dims = rho.dims();
    if (dims.size() != 2)
        throw ValidationError(
            "partial_transpose: bipartite dims metadata is required");
    if (party > 1)
        throw ValidationError("partial_transpose: party index must be 0 or 1");

    const std::size_t da = dims[0];
    const std::size_t db = dims[1];
    ComplexMatrix out(rho.rows(), rho.cols());
    out.set_dims({da, db});
    for (std::size_t a1 = 0; a1 < da; ++a1)
        for (std::size_t b1 = 0; b1 < db; ++b1)
            for (std::size_t a2 = 0; a2 < da; ++a2)
                for (std::size_t b2 = 0; b2 < db; ++b2) {
                    const std::size_t r = a1 * db + b1;
                    const std::size_t c = a2 * db + b2;
                    const std::size_t rt =
                        party == 0 ? a2 * db + b1 : a1 * db + b2;
                    const std::size_t ct =
                        party == 0 ? a1 * db + b2 : a2 * db + b1;
                    out(rt, ct) = rho(r, c);
                }
    return out;
}

double trace_norm(const ComplexMatrix& a, const Tolerances& tol) {
    if (!a.is_square()) throw ValidationError("trace_norm: matrix is not square");
    // For Hermitian input the singular values are |eigenvalues|; the
    // eigendecomposition resolves near-zero values far more accurately
    // than the squared-matrix singular value route.
    const double scale = std::max(1.0, a.max_abs());
    if (a.hermiticity_defect() <= tol.hermiticity * scale) {
        double sum = 0.0;
        for (double lam : eigh(a, tol).values) sum += std::abs(lam);
        return sum;
    }
    const SvdResult s = svd(a, tol);
    double sum = 0.0;
    for (double sv : s.singular_values) sum += sv;
    return sum;
}

ComplexMatrix mat_func(const ComplexMatrix& a, MatFunc f, LogBase base,
                       bool support_restricted, const Tolerances& tol) {
    const EigenResult eig = eigh(a, tol);
    const std::size_t n = eig.values.size();
    const double ln_base = base == LogBase::Two ? std::log(2.0) : 1.0;

    std::vector<Complex> g(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        double lam = eig.values[i];
        if (f != MatFunc::Exp && lam < 0.0 && lam >= -tol.log_clamp) lam = 0.0;
        switch (f) {
            case MatFunc::Exp:
                g[i] = base == LogBase::Two ? std::exp2(lam) : std::exp(lam);
                break;
            case MatFunc::Sqrt:
                if (lam < 0.0)
                    throw DomainError(
                        "mat_func: sqrt of a matrix with negative eigenvalue");
                g[i] = std::sqrt(lam);
                break;
            case MatFunc::Log:
                if (lam < 0.0)
                    throw DomainError(
                        "mat_func: log of a matrix with negative eigenvalue");
                if (lam < tol.log_floor) {
                    if (!support_restricted)
                        throw DomainError(
                            "mat_func: log of a rank-deficient matrix "
                            "(pass support_restricted to skip null "
                            "directions)");
                    g[i] = 0.0;  // support-restricted: null directions drop
                } else {
                    g[i] = std::log(lam) / ln_base;
                }
                break;
        }
    }
    ComplexMatrix out = rebuild(eig.vectors, g);
    // The result of a real spectral map is Hermitian; enforce it exactly.
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = Complex(out(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    if (!a.dims().empty()) out.set_dims(a.dims());
    return out;
}

ComplexMatrix evolution_unitary(const ComplexMatrix& h, double t,
                                const Tolerances& tol) {
    const EigenResult eig = eigh(h, tol);
    std::vector<Complex> g(eig.values.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double phase = -eig.values[i] * t;
        g[i] = Complex(std::cos(phase), std::sin(phase));
    }
    ComplexMatrix u = rebuild(eig.vectors, g);
    if (!h.dims().empty()) u.set_dims(h.dims());
    return u;
}

}  // namespace scopelab
