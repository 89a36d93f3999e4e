#include "fractrace/grid_field.hpp"

#include <fftw3.h>
#include <nlohmann/json.hpp>

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <mutex>
#include <numbers>
#include <sstream>

namespace fractrace {

namespace {

std::mutex g_plan_mutex;

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

void validate(const GridField& f) {
    if (f.n < 1 || f.n > 2) throw GridError("grid dimension must be 1 or 2");
    if (static_cast<int>(f.shape.size()) != f.n) throw GridError("shape length does not match dimension");
    std::size_t count = 1;
    for (int s : f.shape) {
        if (!power_of_two(s)) throw GridError("shape entries must be powers of two");
        count *= static_cast<std::size_t>(s);
    }
    if (!(f.box_length > 0) || !std::isfinite(f.box_length)) throw GridError("box_length must be positive");
    if (f.values.size() != count) throw GridError("value count does not match shape");
    for (double v : f.values)
        if (!std::isfinite(v)) throw GridError("non-finite grid value");
}

std::vector<Complex> transform(const GridField& meta, std::vector<Complex> data, int sign) {
    fftw_plan plan;
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    {
        std::lock_guard<std::mutex> lock(g_plan_mutex);
        plan = fftw_plan_dft(meta.n, meta.shape.data(), ptr, ptr, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(g_plan_mutex);
        fftw_destroy_plan(plan);
    }
    return data;
}

}  // namespace

GridField::GridField(int dim, std::vector<int> shp, double L) : n(dim), shape(std::move(shp)), box_length(L) {
    std::size_t count = 1;
    for (int s : shape) count *= static_cast<std::size_t>(s);
    values.assign(count, 0.0);
}

GridField GridField::uniform(int dim, int N, double L) { return GridField(dim, std::vector<int>(dim, N), L); }

double GridField::integral() const {
    double cell = 1;
    for (int a = 0; a < n; ++a) cell *= spacing(a);
    double s = 0;
    for (double v : values) s += v;
    return s * cell;
}

bool GridField::same_grid(const GridField& o) const {
    return n == o.n && shape == o.shape && box_length == o.box_length;
}

std::vector<Complex> fft_forward(const GridField& f) {
    std::vector<Complex> data(f.values.begin(), f.values.end());
    return transform(f, std::move(data), FFTW_FORWARD);
}

GridField fft_inverse_real(const GridField& meta, const std::vector<Complex>& spectrum) {
    auto data = transform(meta, spectrum, FFTW_BACKWARD);
    GridField out(meta.n, meta.shape, meta.box_length);
    const double inv = 1.0 / static_cast<double>(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) out.values[i] = data[i].real() * inv;
    return out;
}

std::vector<double> wave_numbers(const GridField& f) {
    std::vector<double> out(f.size());
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        std::size_t r = idx;
        double k2 = 0;
        for (int a = f.n - 1; a >= 0; --a) {
            int N = f.shape[a];
            int i = static_cast<int>(r % N);
            r /= N;
            int k = i < N / 2 ? i : i - N;
            double xi = two_pi * k / f.box_length;
            k2 += xi * xi;
        }
        out[idx] = std::sqrt(k2);
    }
    return out;
}

double nyquist(const GridField& f) { return std::numbers::pi * f.shape[0] / f.box_length; }

GridField fractional_laplacian_fft(const GridField& f, double power) {
    if (!(power > 0)) throw std::invalid_argument("fractional power must be positive");
    auto spec = fft_forward(f);
    auto k = wave_numbers(f);
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= (k[i] == 0 ? 0.0 : std::pow(k[i], 2 * power));
    return fft_inverse_real(f, spec);
}

double fractional_pairing(const GridField& f, const GridField& g, double power) {
    if (!f.same_grid(g)) throw GridError("grid mismatch");
    auto a = fft_forward(f), b = fft_forward(g);
    auto k = wave_numbers(f);
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (k[i] > 0) s += std::pow(k[i], 2 * power) * (std::conj(a[i]) * b[i]).real();
    double vol = std::pow(f.box_length, f.n);
    return s * vol / (static_cast<double>(a.size()) * static_cast<double>(a.size()));
}

std::vector<bool> resolved_modes(const GridField& f, double rel_amp, double frac_nyquist) {
    auto spec = fft_forward(f);
    auto k = wave_numbers(f);
    double peak = 0;
    for (const auto& c : spec) peak = std::max(peak, std::abs(c));
    const double kmax = frac_nyquist * nyquist(f);
    std::vector<bool> out(spec.size());
    for (std::size_t i = 0; i < spec.size(); ++i) out[i] = peak > 0 && std::abs(spec[i]) >= rel_amp * peak && k[i] <= kmax;
    return out;
}

double spectral_tail(const GridField& f, double frac_nyquist) {
    auto spec = fft_forward(f);
    auto k = wave_numbers(f);
    double peak = 0, tail = 0;
    const double kmax = frac_nyquist * nyquist(f);
    for (std::size_t i = 0; i < spec.size(); ++i) {
        peak = std::max(peak, std::abs(spec[i]));
        if (k[i] > kmax) tail = std::max(tail, std::abs(spec[i]));
    }
    return peak > 0 ? tail / peak : 0.0;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw GridError("cannot open " + tmp + " for writing");
        os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!os) throw GridError("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw GridError("rename failed for " + path);
}

void save_grid(const GridField& f, const std::string& path) {
    validate(f);
    static_assert(std::endian::native == std::endian::little, "little-endian host expected");
    std::string raw(reinterpret_cast<const char*>(f.values.data()), f.values.size() * sizeof(double));
    nlohmann::ordered_json meta;
    meta["n"] = f.n;
    meta["shape"] = f.shape;
    meta["box_length"] = f.box_length;
    meta["dtype"] = "f64-le";
    write_file_atomic(path, raw);
    write_file_atomic(path + ".json", meta.dump(2) + "\n");
}

GridField load_grid(const std::string& path) {
    std::ifstream ms(path + ".json");
    if (!ms) throw GridError("missing sidecar " + path + ".json");
    nlohmann::json meta;
    try {
        meta = nlohmann::json::parse(ms);
    } catch (const std::exception& e) {
        throw GridError(std::string("sidecar is not valid JSON: ") + e.what());
    }
    for (const char* key : {"n", "shape", "box_length", "dtype"})
        if (!meta.contains(key)) throw GridError(std::string("sidecar lacks field ") + key);
    if (meta["dtype"] != "f64-le") throw GridError("unsupported dtype");
    GridField f;
    try {
        f.n = meta["n"].get<int>();
        f.shape = meta["shape"].get<std::vector<int>>();
        f.box_length = meta["box_length"].get<double>();
    } catch (const std::exception& e) {
        throw GridError(std::string("sidecar field has the wrong type: ") + e.what());
    }
    std::ifstream is(path, std::ios::binary);
    if (!is) throw GridError("cannot open " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    const std::string raw = buf.str();
    if (raw.empty()) throw GridError("empty grid file " + path);
    if (raw.size() % sizeof(double) != 0) throw GridError("grid file size is not a multiple of 8 bytes");
    f.values.resize(raw.size() / sizeof(double));
    std::memcpy(f.values.data(), raw.data(), raw.size());
    validate(f);
    return f;
}

GridField load_csv(const std::string& path, double box_length) {
    std::ifstream is(path);
    if (!is) throw GridError("cannot open " + path);
    std::string line;
    if (!std::getline(is, line)) throw GridError("empty CSV file " + path);
    GridField f;
    f.n = 1;
    f.box_length = box_length;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        try {
            std::size_t used = 0;
            double v = std::stod(line, &used);
            f.values.push_back(v);
        } catch (const std::exception&) {
            throw GridError("bad CSV value: " + line);
        }
    }
    if (f.values.empty()) throw GridError("CSV has no values");
    f.shape = {static_cast<int>(f.values.size())};
    validate(f);
    return f;
}

}  // namespace fractrace
