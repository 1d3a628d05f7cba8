// Command-line front end for the epsics library. A thin shell: every number
// printed is the unmodified result of a single library call, formatted with
// "%.17g" (CSV) or shortest-round-trip (JSON), so repeated runs with the
// same arguments produce byte-identical output.
//
// Exit codes: 0 success; 1 verification suite reported a failure;
// 2 usage error; 3 numerical domain or quadrature-adequacy error;
// 4 input/output error.

#include "epsics/bargmann.hpp"
#include "epsics/polyfock.hpp"
#include "epsics/quadrature.hpp"
#include "epsics/sampled_function.hpp"
#include "epsics/specfun.hpp"
#include "epsics/states.hpp"
#include "epsics/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using cxd = std::complex<double>;
using ordered_json = nlohmann::ordered_json;
using epsics::SampledFunction;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Options {
    std::string command;
    std::string quantity;
    std::string input;
    std::string out;
    std::string format = "csv";
    std::string grid_re;
    std::string grid_im;
    int m = 0;
    int trunc = 0;
    int quad_radial = 64;
    int quad_angular = 64;
    int quad_hermite = 0; // 0 = per-command default
    double z_re = 0.0;
    double z_im = 0.0;
    double w_re = 0.0;
    double w_im = 0.0;
    double x_min = -4.0;
    double x_max = 4.0;
    int x_count = 81;
    double adequacy_tol = 0.0; // 0 = library default
    std::optional<int> n;
    std::optional<double> eps;
    std::optional<double> tau;
};

// Output sink: stdout by default, a file when --out is given.
class Writer {
  public:
    explicit Writer(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw IoError("cannot open output file: " + path);
            os_ = &file_;
        } else {
            os_ = &std::cout;
        }
    }
    std::ostream& os() { return *os_; }
    void finish() {
        os_->flush();
        if (file_.is_open() && !file_.good())
            throw IoError("failed writing output file");
    }

  private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 0;
};

GridSpec parse_triple(const std::string& text, const char* flag) {
    GridSpec g;
    char extra;
    if (std::sscanf(text.c_str(), "%lf,%lf,%d%c", &g.min, &g.max, &g.count,
                    &extra) != 3)
        throw std::invalid_argument(std::string(flag) +
                                    " expects min,max,count; got '" + text +
                                    "'");
    if (g.count < 1)
        throw std::invalid_argument(std::string(flag) +
                                    ": count must be >= 1");
    if (g.count > 1 && !(g.max > g.min))
        throw std::invalid_argument(std::string(flag) +
                                    ": max must exceed min for count > 1");
    return g;
}

std::vector<double> linspace(const GridSpec& g) {
    std::vector<double> out(g.count);
    if (g.count == 1) {
        out[0] = g.min;
        return out;
    }
    for (int i = 0; i < g.count; ++i)
        out[i] = g.min + (g.max - g.min) * i / (g.count - 1);
    return out;
}

std::vector<double> x_grid(const Options& o) {
    if (o.x_count < 1)
        throw std::invalid_argument("--x-count must be >= 1");
    if (o.x_count > 1 && !(o.x_max > o.x_min))
        throw std::invalid_argument("--x-max must exceed --x-min");
    return linspace({o.x_min, o.x_max, o.x_count});
}

// The z points a command runs over: the --grid-re/--grid-im product in
// re-major order, or the single --z-re/--z-im point.
std::vector<cxd> z_points(const Options& o) {
    if (o.grid_re.empty() != o.grid_im.empty())
        throw std::invalid_argument(
            "--grid-re and --grid-im must be given together");
    if (o.grid_re.empty()) return {cxd{o.z_re, o.z_im}};
    const std::vector<double> res =
        linspace(parse_triple(o.grid_re, "--grid-re"));
    const std::vector<double> ims =
        linspace(parse_triple(o.grid_im, "--grid-im"));
    std::vector<cxd> out;
    out.reserve(res.size() * ims.size());
    for (double re : res)
        for (double im : ims) out.emplace_back(re, im);
    return out;
}

double require_eps(const Options& o) {
    if (!o.eps)
        throw std::invalid_argument("--eps is required for this command");
    return *o.eps;
}

void emit_csv_row(std::ostream& os, const std::vector<double>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << fmt(cells[i]);
    }
    os << '\n';
}

void emit_json_row(std::ostream& os, const std::vector<std::string>& keys,
                   const std::vector<double>& cells) {
    ordered_json j;
    for (std::size_t i = 0; i < keys.size(); ++i) j[keys[i]] = cells[i];
    os << j.dump() << '\n';
}

// Table emitter shared by the numerical commands: one header row (CSV) and
// one row per record, keys fixed per quantity.
class Table {
  public:
    Table(Writer& w, bool json, std::vector<std::string> columns,
          std::vector<std::string> comments = {})
        : writer_(w), json_(json), columns_(std::move(columns)) {
        if (!json_) {
            for (const std::string& c : comments)
                writer_.os() << "# " << c << '\n';
            for (std::size_t i = 0; i < columns_.size(); ++i) {
                if (i) writer_.os() << ',';
                writer_.os() << columns_[i];
            }
            writer_.os() << '\n';
        } else {
            for (const std::string& c : comments) extra_.push_back(c);
        }
    }

    void row(const std::vector<double>& cells) {
        if (json_) {
            ordered_json j;
            for (std::size_t i = 0; i < columns_.size(); ++i)
                j[columns_[i]] = cells[i];
            for (const std::string& c : extra_) {
                const auto pos = c.find('=');
                j[c.substr(0, pos)] = c.substr(pos + 1);
            }
            writer_.os() << j.dump() << '\n';
        } else {
            emit_csv_row(writer_.os(), cells);
        }
    }

  private:
    Writer& writer_;
    bool json_;
    std::vector<std::string> columns_;
    std::vector<std::string> extra_;
};

SampledFunction load_input(const std::string& spec) {
    if (spec.empty())
        throw std::invalid_argument("--input is required for this command");
    const std::string eig1 = "hermite-eigenstate:";
    const std::string eig2 = "eigenstate:";
    for (const std::string& prefix : {eig1, eig2}) {
        if (spec.rfind(prefix, 0) == 0) {
            int n = -1;
            try {
                n = std::stoi(spec.substr(prefix.size()));
            } catch (const std::exception&) {
                throw std::invalid_argument(
                    "--input eigenstate index is not an integer: " + spec);
            }
            if (n < 0)
                throw std::invalid_argument(
                    "--input eigenstate index must be >= 0");
            return SampledFunction::eigenstate(n);
        }
    }
    std::ifstream in(spec);
    if (!in) throw IoError("cannot open input file: " + spec);
    std::vector<double> xs;
    std::vector<double> vs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        for (char& ch : line)
            if (ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
        std::istringstream row(line);
        double x, v;
        if (!(row >> x >> v)) {
            if (line_no == 1) continue; // tolerate one header row
            throw IoError("malformed sample row " + std::to_string(line_no) +
                          " in " + spec);
        }
        xs.push_back(x);
        vs.push_back(v);
    }
    if (in.bad()) throw IoError("failed reading input file: " + spec);
    try {
        return SampledFunction::from_samples(std::move(xs), std::move(vs));
    } catch (const std::invalid_argument& e) {
        throw IoError("invalid sample data in " + spec + ": " + e.what());
    }
}

int cmd_eval(const Options& o) {
    Writer writer(o.out);
    const bool json = o.format == "json";
    if (o.quantity == "phi") {
        if (!o.n)
            throw std::invalid_argument(
                "--n is required for --quantity phi");
        Table table(writer, json, {"z_re", "z_im", "value_re", "value_im"});
        for (const cxd& z : z_points(o)) {
            const cxd v = epsics::polyfock::phi({o.m, *o.n}, z);
            table.row({z.real(), z.imag(), v.real(), v.imag()});
        }
    } else if (o.quantity == "kernel-km") {
        Table table(writer, json,
                    {"z_re", "z_im", "w_re", "w_im", "value_re", "value_im"});
        const cxd w{o.w_re, o.w_im};
        for (const cxd& z : z_points(o)) {
            const cxd v = epsics::polyfock::reproducing_kernel(o.m, z, w);
            table.row({z.real(), z.imag(), w.real(), w.imag(), v.real(),
                       v.imag()});
        }
    } else if (o.quantity == "kernel-overlap") {
        const double eps = require_eps(o);
        Table table(writer, json,
                    {"z_re", "z_im", "w_re", "w_im", "value_re", "value_im"});
        const cxd w{o.w_re, o.w_im};
        for (const cxd& z : z_points(o)) {
            const cxd v = epsics::states::overlap(z, w, o.m, eps).value;
            table.row({z.real(), z.imag(), w.real(), w.imag(), v.real(),
                       v.imag()});
        }
    } else if (o.quantity == "normalization") {
        const double eps = require_eps(o);
        // log_scale = 1 marks rows whose value column carries the natural
        // log of the normalization because the plain value would not fit
        // in double range (|log| > 300).
        Table table(writer, json, {"z_re", "z_im", "value", "log_scale"});
        for (const cxd& z : z_points(o)) {
            const epsics::states::StateLabel label(z, o.m, eps);
            const double lg = epsics::states::log_normalization(label);
            const bool log_scale = std::abs(lg) > 300.0;
            table.row({z.real(), z.imag(), log_scale ? lg : std::exp(lg),
                       log_scale ? 1.0 : 0.0});
        }
    } else if (o.quantity == "wavefunction") {
        const double eps = require_eps(o);
        const epsics::states::StateLabel label(cxd{o.z_re, o.z_im}, o.m, eps);
        Table table(writer, json, {"x", "value_re", "value_im"});
        for (double x : x_grid(o)) {
            const cxd v =
                o.trunc > 0
                    ? epsics::states::wavefunction_series(x, label, o.trunc)
                    : epsics::states::wavefunction_closed(x, label);
            table.row({x, v.real(), v.imag()});
        }
    } else if (o.quantity == "heat-kernel") {
        const double eps = require_eps(o);
        Table table(writer, json, {"x", "y", "value"});
        for (double x : x_grid(o))
            table.row({x, o.w_re,
                       epsics::states::heat_kernel(eps, x, o.w_re)});
    } else if (o.quantity == "mehler") {
        if (!o.tau)
            throw std::invalid_argument(
                "--tau is required for --quantity mehler");
        Table table(writer, json, {"x", "y", "value"});
        for (double x : x_grid(o))
            table.row({x, o.w_re,
                       epsics::states::mehler_kernel(*o.tau, x, o.w_re)});
    } else if (o.quantity.empty()) {
        throw std::invalid_argument("--quantity is required for eval");
    } else {
        throw std::invalid_argument("unknown eval quantity: " + o.quantity);
    }
    writer.finish();
    return 0;
}

int cmd_transform(const Options& o) {
    const SampledFunction f = load_input(o.input);
    epsics::bargmann::TransformSpec spec;
    spec.m = o.m;
    spec.eps = require_eps(o);
    if (o.quad_hermite > 0) spec.quad_order = o.quad_hermite;
    if (o.adequacy_tol > 0.0) spec.adequacy_tol = o.adequacy_tol;
    const std::vector<cxd> zs = z_points(o);
    const std::vector<cxd> values =
        epsics::bargmann::transform_grid(spec, f, zs);
    Writer writer(o.out);
    const bool json = o.format == "json";
    Table table(writer, json, {"z_re", "z_im", "value_re", "value_im"},
                {"quad_order=" + std::to_string(spec.quad_order)});
    for (std::size_t i = 0; i < zs.size(); ++i)
        table.row({zs[i].real(), zs[i].imag(), values[i].real(),
                   values[i].imag()});
    writer.finish();
    return 0;
}

int cmd_verify(const Options& o) {
    std::vector<std::string> names;
    if (o.quantity.empty() || o.quantity == "all") {
        names = epsics::verify::suite_names();
    } else {
        std::istringstream parts(o.quantity);
        std::string item;
        while (std::getline(parts, item, ','))
            if (!item.empty()) names.push_back(item);
    }
    epsics::verify::SuiteOptions sopts;
    sopts.quad_radial = o.quad_radial;
    sopts.quad_angular = o.quad_angular;
    const std::vector<epsics::verify::VerificationReport> reports =
        epsics::verify::run_all(names, sopts);
    Writer writer(o.out);
    const bool json = o.format == "json";
    if (!json)
        writer.os()
            << "suite,defect_abs,defect_rel,tolerance,passed,runtime_ms\n";
    bool all_passed = true;
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed;
        if (json) {
            writer.os() << r.to_json() << '\n';
        } else {
            writer.os() << r.suite << ',' << fmt(r.defect_abs) << ','
                        << fmt(r.defect_rel) << ',' << fmt(r.tolerance)
                        << ',' << (r.passed ? 1 : 0) << ','
                        << fmt(r.runtime_ms) << '\n';
        }
    }
    writer.finish();
    return all_passed ? 0 : 1;
}

int cmd_sweep(const Options& o) {
    Writer writer(o.out);
    const bool json = o.format == "json";
    if (o.quantity == "overlap-limit") {
        const std::vector<double> eps_list{0.1, 0.01, 0.001};
        const std::vector<double> defects =
            epsics::states::overlap_limit_defect(cxd{o.z_re, o.z_im},
                                                 cxd{o.w_re, o.w_im}, o.m,
                                                 eps_list);
        Table table(writer, json, {"eps", "defect"});
        for (std::size_t i = 0; i < eps_list.size(); ++i)
            table.row({eps_list[i], defects[i]});
    } else if (o.quantity == "identity-limit") {
        const std::vector<double> eps_list{0.5, 0.2, 0.1, 0.05, 0.02};
        const int n_max = o.n.value_or(5);
        const epsics::quad::QuadratureRule rule =
            epsics::quad::polar_rule(o.quad_radial, o.quad_angular);
        Table table(writer, json, {"eps", "defect"});
        for (double eps : eps_list) {
            const auto res =
                epsics::verify::identity_matrix(o.m, eps, n_max, rule);
            double dev = 0.0;
            for (int a = 0; a <= n_max; ++a)
                for (int b = 0; b <= n_max; ++b) {
                    const double want = a == b ? 1.0 : 0.0;
                    dev = std::max(dev,
                                   std::abs(res.matrix[a][b] - want));
                }
            table.row({eps, dev});
        }
    } else if (o.quantity == "heat-limit") {
        const SampledFunction f = load_input(o.input);
        const std::vector<double> eps_list{0.2, 0.1, 0.05, 0.02};
        const std::vector<double> xs = x_grid(o);
        const int order = o.quad_hermite > 0 ? o.quad_hermite : 200;
        const double tol = o.adequacy_tol > 0.0 ? o.adequacy_tol : 1e-10;
        Table table(writer, json, {"eps", "defect"});
        for (double eps : eps_list) {
            const std::vector<double> out =
                epsics::states::apply_heat(eps, f, xs, order, tol);
            double dev = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i)
                dev = std::max(dev, std::abs(out[i] - f(xs[i])));
            table.row({eps, dev});
        }
    } else if (o.quantity.empty()) {
        throw std::invalid_argument("--quantity is required for sweep");
    } else {
        throw std::invalid_argument("unknown sweep quantity: " + o.quantity);
    }
    writer.finish();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{
        "epsics: deformed coherent states over the polyanalytic "
        "oscillator basis — evaluation, transforms, verification"};
    app.add_option("--command", o.command,
                   "One of: eval, transform, verify, sweep")
        ->required()
        ->check(CLI::IsMember({"eval", "transform", "verify", "sweep"}));
    app.add_option(
        "--quantity", o.quantity,
        "eval: phi|kernel-km|kernel-overlap|normalization|wavefunction|"
        "heat-kernel|mehler; verify: comma-separated suite names or 'all'; "
        "sweep: overlap-limit|identity-limit|heat-limit");
    app.add_option("--m", o.m, "Basis sheet index m >= 0");
    app.add_option("--n", o.n,
                   "Basis member index (phi) or sweep matrix size");
    app.add_option("--eps", o.eps, "Damping parameter");
    app.add_option("--tau", o.tau, "Kernel parameter in (0,1) for mehler");
    app.add_option("--z-re", o.z_re, "Re z");
    app.add_option("--z-im", o.z_im, "Im z");
    app.add_option("--w-re", o.w_re,
                   "Re w (also the fixed y for real-line kernels)");
    app.add_option("--w-im", o.w_im, "Im w");
    app.add_option("--x-min", o.x_min, "Position grid start");
    app.add_option("--x-max", o.x_max, "Position grid end");
    app.add_option("--x-count", o.x_count, "Position grid size");
    app.add_option("--grid-re", o.grid_re, "Complex grid re: min,max,count");
    app.add_option("--grid-im", o.grid_im, "Complex grid im: min,max,count");
    app.add_option("--trunc", o.trunc,
                   "Series truncation; 0 uses the closed form / default");
    app.add_option("--quad-radial", o.quad_radial,
                   "Radial order of the complex-plane rule");
    app.add_option("--quad-angular", o.quad_angular,
                   "Angular order of the complex-plane rule");
    app.add_option("--quad-hermite", o.quad_hermite,
                   "Real-line Gauss rule order (0 = command default)");
    app.add_option("--adequacy-tol", o.adequacy_tol,
                   "Relative tolerance for the doubled-order quadrature "
                   "self-check (0 = library default; raise it for sampled "
                   "inputs whose interpolation error dominates)");
    app.add_option("--input", o.input,
                   "transform/sweep input: hermite-eigenstate:N or a CSV "
                   "file of x,value samples");
    app.add_option("--out", o.out, "Output file (default stdout)");
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (o.command == "eval") return cmd_eval(o);
        if (o.command == "transform") return cmd_transform(o);
        if (o.command == "verify") return cmd_verify(o);
        return cmd_sweep(o);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
