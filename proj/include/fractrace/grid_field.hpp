#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fractrace {

using Complex = std::complex<double>;

// Periodic samples on [-L/2, L/2)^n, row-major; point i sits at -L/2 + i L / N.
class GridField {
public:
    int n = 1;
    std::vector<int> shape;
    double box_length = 1.0;
    std::vector<double> values;

    GridField() = default;
    GridField(int dim, std::vector<int> shp, double L);
    static GridField uniform(int dim, int N, double L);

    std::size_t size() const { return values.size(); }
    double spacing(int axis = 0) const { return box_length / shape[axis]; }
    double coordinate(int axis, int i) const { return -0.5 * box_length + i * spacing(axis); }
    // Sum of f times the cell volume.
    double integral() const;
    bool same_grid(const GridField& o) const;

    // Fills values from f(x) with x of length n.
    template <class F>
    void fill(F&& f) {
        std::vector<double> x(n);
        for (std::size_t idx = 0; idx < values.size(); ++idx) {
            std::size_t r = idx;
            for (int a = n - 1; a >= 0; --a) {
                x[a] = coordinate(a, static_cast<int>(r % shape[a]));
                r /= shape[a];
            }
            values[idx] = f(x);
        }
    }
};

// Unnormalized forward DFT; the inverse divides by the point count.
std::vector<Complex> fft_forward(const GridField& f);
GridField fft_inverse_real(const GridField& meta, const std::vector<Complex>& spectrum);
// |xi| for every spectral index, in the same layout.
std::vector<double> wave_numbers(const GridField& f);
double nyquist(const GridField& f);

GridField fractional_laplacian_fft(const GridField& f, double power);
// sum over the box of f (-Lap)^power g
double fractional_pairing(const GridField& f, const GridField& g, double power);

// Modes kept for comparisons: |f^| >= rel_amp * max |f^| and |xi| <= frac_nyquist * nyquist.
std::vector<bool> resolved_modes(const GridField& f, double rel_amp = 1e-8, double frac_nyquist = 0.6);
// Largest |f^| outside the resolved band relative to the peak.
double spectral_tail(const GridField& f, double frac_nyquist = 0.6);

// Raw little-endian float64 values with a JSON sidecar at path + ".json"; writes are atomic.
void save_grid(const GridField& f, const std::string& path);
GridField load_grid(const std::string& path);
// One value per line after a header line; 1-D only.
GridField load_csv(const std::string& path, double box_length);

// Writes text to path through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& contents);

struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fractrace
