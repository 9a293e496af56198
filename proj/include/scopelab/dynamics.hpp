#pragma once

// Time evolution in the Schrodinger, Heisenberg and interaction pictures,
// Kraus channels and their unitary dilations, the consistent-histories
// decoherence functional, and the Wigner function on a sampled grid.

#include <cstddef>
#include <optional>
#include <vector>

#include "scopelab/matrix.hpp"
#include "scopelab/states.hpp"
#include "scopelab/tolerances.hpp"

namespace scopelab {

// Hermitian generator, optionally split H = H0 + H' for the interaction
// picture.
class HamiltonianSpec {
  public:
    explicit HamiltonianSpec(ComplexMatrix h,
                             const Tolerances& tol = kDefaultTol);
    HamiltonianSpec(ComplexMatrix h0, ComplexMatrix hprime,
                    const Tolerances& tol = kDefaultTol);

    const ComplexMatrix& h() const { return h_; }
    bool has_split() const { return h0_.has_value(); }
    const ComplexMatrix& h0() const;
    const ComplexMatrix& hprime() const;

  private:
    ComplexMatrix h_;
    std::optional<ComplexMatrix> h0_;
    std::optional<ComplexMatrix> hprime_;
};

PureState evolve(const PureState& psi, const HamiltonianSpec& h, double t,
                 const Tolerances& tol = kDefaultTol);
DensityMatrix evolve(const DensityMatrix& rho, const HamiltonianSpec& h,
                     double t, const Tolerances& tol = kDefaultTol);

// The same expectation value computed along three independent code paths;
// the spread is a picture-equivalence certificate.
struct PictureExpectations {
    double schrodinger = 0.0;
    double heisenberg = 0.0;
    double dirac = 0.0;
};

PictureExpectations expectation_in_pictures(const ComplexMatrix& observable,
                                            const PureState& psi0,
                                            const HamiltonianSpec& h, double t,
                                            const Tolerances& tol = kDefaultTol);

// Completely positive trace-preserving map in Kraus form.
class Channel {
  public:
    explicit Channel(std::vector<ComplexMatrix> kraus,
                     const Tolerances& tol = kDefaultTol);
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
    std::size_t dim() const { return kraus_.front().rows(); }

  private:
    std::vector<ComplexMatrix> kraus_;
};

// Kraus operators K_i = <i_E| U |env_init_E> of a system (x) environment
// unitary with the environment prepared in a basis state.
Channel kraus_from_dilation(const ComplexMatrix& u, std::size_t env_dim,
                            std::size_t env_init = 0,
                            const Tolerances& tol = kDefaultTol);

DensityMatrix apply_channel(const DensityMatrix& rho, const Channel& ch,
                            const Tolerances& tol = kDefaultTol);

// One history step: evolve by the unitary, then ask which projector of the
// complete orthogonal family fired.
struct HistoryStep {
    ComplexMatrix unitary;
    std::vector<ComplexMatrix> projectors;
};

class HistorySpec {
  public:
    HistorySpec(DensityMatrix initial, std::vector<HistoryStep> steps,
                const Tolerances& tol = kDefaultTol);
    const DensityMatrix& initial() const { return initial_; }
    const std::vector<HistoryStep>& steps() const { return steps_; }
    std::size_t lattice_size() const;  // product of the family sizes

  private:
    DensityMatrix initial_;
    std::vector<HistoryStep> steps_;
};

// D(alpha, alpha') = Tr(C_alpha rho C_alpha'^dagger) with the class
// operator C_alpha the ordered product of (projector * unitary) factors.
Complex decoherence_functional(const HistorySpec& spec,
                               const std::vector<std::size_t>& alpha,
                               const std::vector<std::size_t>& alpha_prime);

struct ConsistencyReport {
    bool consistent = false;
    double max_offdiag = 0.0;
};

// Scans the full outcome lattice (capped at 1e5 histories) for off-diagonal
// decoherence-functional magnitudes above the consistency threshold.
ConsistencyReport consistency_check(const HistorySpec& spec,
                                    const Tolerances& tol = kDefaultTol);

// Uniformly sampled one-dimensional wavefunction, hbar = 1.
class WavefunctionGrid {
  public:
    WavefunctionGrid(std::vector<Complex> samples, double x0, double dx,
                     const Tolerances& tol = kDefaultTol);

    const std::vector<Complex>& samples() const { return samples_; }
    double x0() const { return x0_; }
    double dx() const { return dx_; }
    double x_max() const;
    double norm() const;  // sum |psi|^2 dx

    // True when both grid ends have magnitude below eps, i.e. the grid
    // covers the support well enough for phase-space integrals.
    bool covers_support(double eps = 1e-8) const;

    // Linear interpolation between samples; zero outside the grid.
    Complex value_at(double x) const;

  private:
    std::vector<Complex> samples_;
    double x0_;
    double dx_;
};

// W(q, p) = (1/pi) Re Int dx e^{-2ipx} conj(psi(q-x)) psi(q+x) by the
// trapezoid rule on the grid spacing; the imaginary part is asserted small.
double wigner(const WavefunctionGrid& psi, double q, double p,
              const Tolerances& tol = kDefaultTol);

}  // namespace scopelab
