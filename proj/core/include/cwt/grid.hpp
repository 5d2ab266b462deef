#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cwt {

enum class Domain : std::uint8_t { Spatial, Frequency };

inline constexpr int kMaxGridDim = 4;

// Uniform periodic box [-L, L)^d sampled at power-of-two counts per axis.
// Frequencies are pi * k / L with the usual DFT index folding.
class GridSpec {
public:
    GridSpec() = default;
    GridSpec(std::span<const int> sizes, std::span<const double> box_halfwidth);
    GridSpec(std::initializer_list<int> sizes, std::initializer_list<double> box_halfwidth);

    int dim() const { return dim_; }
    int size(int axis) const { return sizes_[axis]; }
    double halfwidth(int axis) const { return half_[axis]; }
    std::size_t total_size() const;

    double spacing(int axis) const { return 2.0 * half_[axis] / sizes_[axis]; }
    double cell_volume() const;
    double box_volume() const;

    // -L + i h
    double coordinate(int axis, int index) const {
        return -half_[axis] + spacing(axis) * index;
    }
    // signed DFT index: i for i < N/2, i - N otherwise
    int folded_index(int axis, int index) const {
        return index < sizes_[axis] / 2 ? index : index - sizes_[axis];
    }
    double frequency(int axis, int index) const {
        return M_PI * folded_index(axis, index) / half_[axis];
    }

    void unflatten(std::size_t flat, int* indices) const;
    std::size_t flatten(std::span<const int> indices) const;

    void point(std::size_t flat, double* x) const;
    void frequency_point(std::size_t flat, double* xi) const;

    bool operator==(const GridSpec& other) const;

private:
    int dim_ = 0;
    std::array<int, kMaxGridDim> sizes_{};
    std::array<double, kMaxGridDim> half_{};
};

class GridFunction {
public:
    GridFunction() = default;
    explicit GridFunction(GridSpec spec, Domain domain = Domain::Spatial);

    static GridFunction sample(
        const GridSpec& spec,
        const std::function<std::complex<double>(std::span<const double>)>& f);
    static GridFunction sample_real(const GridSpec& spec,
                                    const std::function<double(std::span<const double>)>& f);

    const GridSpec& spec() const { return spec_; }
    Domain domain() const { return domain_; }
    void set_domain(Domain d) { domain_ = d; }

    std::span<const std::complex<double>> values() const { return values_; }
    std::span<std::complex<double>> values() { return values_; }
    std::complex<double> operator[](std::size_t i) const { return values_[i]; }
    std::complex<double>& operator[](std::size_t i) { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    double max_abs() const;
    double max_imag_abs() const;
    bool is_real(double rel_tol = 1e-12) const;
    std::complex<double> mean() const;
    GridFunction& subtract_mean();

    GridFunction& operator+=(const GridFunction& other);
    GridFunction& operator-=(const GridFunction& other);
    GridFunction& operator*=(std::complex<double> scale);
    friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
    friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
    friend GridFunction operator*(GridFunction a, std::complex<double> s) { return a *= s; }
    friend GridFunction operator*(std::complex<double> s, GridFunction a) { return a *= s; }

private:
    GridSpec spec_;
    Domain domain_ = Domain::Spatial;
    std::vector<std::complex<double>> values_;
};

enum class NormKind { L1, L2, LInf };

// Riemann-sum L1/L2 norms (cell-volume weighted); plain sup for LInf.
double norms(const GridFunction& f, NormKind p);

double rel_l2_error(const GridFunction& got, const GridFunction& want);
double rel_linf_error(const GridFunction& got, const GridFunction& want);

}  // namespace cwt
