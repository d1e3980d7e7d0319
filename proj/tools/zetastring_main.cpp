// Command-line front end.  Every module sits behind a subcommand with
// file-based, byte-reproducible artifacts: CSV for data tables, JSON
// (stable key order) for summaries.  Exit status: 0 success, 1 usage
// error, 2 domain error.
//
// Artifacts are written atomically (temp file + rename), and relative
// output paths are resolved against ZETASTRING_OUT_DIR when it is set.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetastring/complex_dimensions.hpp"
#include "zetastring/errors.hpp"
#include "zetastring/fractal_string.hpp"
#include "zetastring/rh_probe.hpp"
#include "zetastring/spectral_operator.hpp"
#include "zetastring/zeta.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using cplx = std::complex<double>;

constexpr std::uint64_t kDefaultSeed = 20250801ull;

std::string g17(double v) {
    char b[48];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

std::string g10(double v) {
    char b[48];
    std::snprintf(b, sizeof b, "%.10g", v);
    return b;
}

std::string f10(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.10f", v);
    return b;
}

std::string complex_text(cplx v) {
    if (v.imag() == 0.0) return f10(v.real());
    return f10(v.real()) + (v.imag() < 0.0 ? " - " : " + ") +
           f10(std::abs(v.imag())) + "i";
}

// Relative artifact paths land in ZETASTRING_OUT_DIR when it is set.
std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_absolute()) return p;
    if (const char* dir = std::getenv("ZETASTRING_OUT_DIR"); dir && *dir)
        return std::filesystem::path(dir) / p;
    return p;
}

// Atomic write: the artifact appears complete or not at all.
void write_artifact(const std::string& out, const std::string& content) {
    const std::filesystem::path path = resolve_out(out);
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp(path.string() + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw zst::DomainError("cannot write artifact '" + path.string() +
                                   "'");
        f << content;
        f.flush();
        if (!f)
            throw zst::DomainError("write failed for artifact '" +
                                   path.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

std::string json_artifact(const ojson& j) { return j.dump(2) + "\n"; }

double parse_double_strict(const std::string& text, const std::string& what) {
    if (text.empty()) throw zst::DomainError("empty " + what);
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        throw zst::DomainError("cannot parse " + what + " '" + text + "'");
    return v;
}

// Accepts "a", "a+bi", "a-bi", "bi", "i", and "a,b".
cplx parse_complex(const std::string& text) {
    std::string t;
    for (const char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw zst::DomainError("empty complex literal");

    const auto comma = t.find(',');
    if (comma != std::string::npos)
        return {parse_double_strict(t.substr(0, comma), "complex literal"),
                parse_double_strict(t.substr(comma + 1), "complex literal")};

    if (t.back() == 'i' || t.back() == 'I') {
        t.pop_back();
        std::size_t split = std::string::npos;
        for (std::size_t i = t.size(); i-- > 1;) {
            if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' &&
                t[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            if (t.empty() || t == "+") return {0.0, 1.0};
            if (t == "-") return {0.0, -1.0};
            return {0.0, parse_double_strict(t, "complex literal")};
        }
        std::string im = t.substr(split);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return {parse_double_strict(t.substr(0, split), "complex literal"),
                parse_double_strict(im, "complex literal")};
    }
    return {parse_double_strict(t, "complex literal"), 0.0};
}

const char* string_kind_name(zst::StringKind k) {
    switch (k) {
        case zst::StringKind::Explicit: return "explicit";
        case zst::StringKind::PowerLaw: return "power_law";
        case zst::StringKind::SelfSimilar: return "self_similar";
    }
    return "unknown";
}

const char* verdict_name(zst::QuasiVerdict v) {
    return v == zst::QuasiVerdict::QuasiInvertibleUpToT
               ? "QuasiInvertibleUpToT"
               : "NotQuasiInvertible";
}

// String spec file: {"kind": "self_similar", "r": .., "m": .., "l1": ..},
// {"kind": "power_law", "L": .., "D": ..}, or
// {"kind": "explicit", "lengths": [..]}.  Unknown keys are rejected.
zst::FractalString load_string_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw zst::DomainError("cannot open string spec '" + path + "'");
    try {
        const nlohmann::json j = nlohmann::json::parse(in);
        if (!j.is_object())
            throw zst::SchemaMismatch(path, "string spec must be a JSON object");
        if (!j.contains("kind") || !j.at("kind").is_string())
            throw zst::SchemaMismatch(path, "missing string field \"kind\"");
        const auto kind = j.at("kind").get<std::string>();

        const auto exact_keys = [&](std::vector<std::string> keys) {
            for (const auto& item : j.items()) {
                if (item.key() == "kind") continue;
                if (std::find(keys.begin(), keys.end(), item.key()) ==
                    keys.end())
                    throw zst::SchemaMismatch(
                        path, "unknown key \"" + item.key() + "\" for kind \"" +
                                  kind + "\"");
            }
            for (const auto& k : keys)
                if (!j.contains(k))
                    throw zst::SchemaMismatch(path, "missing key \"" + k +
                                                        "\" for kind \"" +
                                                        kind + "\"");
        };

        if (kind == "self_similar") {
            exact_keys({"r", "m", "l1"});
            return zst::FractalString::self_similar(
                j.at("r").get<double>(), j.at("m").get<long long>(),
                j.at("l1").get<double>());
        }
        if (kind == "power_law") {
            exact_keys({"L", "D"});
            return zst::FractalString::power_law(j.at("L").get<double>(),
                                                 j.at("D").get<double>());
        }
        if (kind == "explicit") {
            exact_keys({"lengths"});
            return zst::FractalString::explicit_lengths(
                j.at("lengths").get<std::vector<double>>());
        }
        throw zst::SchemaMismatch(path, "unknown kind \"" + kind + "\"");
    } catch (const nlohmann::json::exception& e) {
        throw zst::SchemaMismatch(path, e.what());
    }
}

// ---------------------------------------------------------------- zeta

std::string run_zeta(const std::string& s_text, const std::string& out) {
    const cplx s = parse_complex(s_text);
    const zst::ZetaEvaluator ev;
    const cplx v = zst::zeta(ev, s);

    std::string sname = g10(s.real());
    if (s.imag() != 0.0)
        sname += (s.imag() < 0.0 ? "-" : "+") + g10(std::abs(s.imag())) + "i";

    if (!out.empty()) {
        ojson j;
        j["kind"] = "zeta_value";
        j["s_re"] = s.real();
        j["s_im"] = s.imag();
        j["value_re"] = v.real();
        j["value_im"] = v.imag();
        j["abs"] = std::abs(v);
        write_artifact(out, json_artifact(j));
    }
    return "zeta(" + sname + ") = " + complex_text(v);
}

// -------------------------------------------------------------- string

std::string run_string(const std::string& spec, const std::string& s_text,
                       const std::optional<double>& x, const std::string& out) {
    const zst::FractalString S = load_string_spec(spec);
    bool finite = false;
    const double D = zst::minkowski_dimension(S, &finite);
    const double len = zst::total_length(S);

    ojson j;
    j["kind"] = "string_summary";
    j["string_kind"] = string_kind_name(S.kind);
    j["dimension"] = D;
    j["finite"] = finite;
    j["total_length"] = len;

    std::string line = std::string("string ") + string_kind_name(S.kind) +
                       ": dimension=" + g10(D) + " total_length=" + g10(len);
    if (!s_text.empty()) {
        const cplx s = parse_complex(s_text);
        const cplx z = zst::geometric_zeta(S, s);
        j["s_re"] = s.real();
        j["s_im"] = s.imag();
        j["zeta_L_re"] = z.real();
        j["zeta_L_im"] = z.imag();
        line += " zeta_L(" + s_text + ")=" + complex_text(z);
    }
    if (x.has_value()) {
        const long long n = zst::geometric_counting(S, *x);
        j["x"] = *x;
        j["count"] = n;
        line += " N(" + g10(*x) + ")=" + std::to_string(n);
    }
    if (!out.empty()) write_artifact(out, json_artifact(j));
    return line;
}

// ---------------------------------------------------------------- dims

std::string run_dims(const std::string& spec, int n_max,
                     const std::string& out) {
    const zst::FractalString S = load_string_spec(spec);
    const zst::ComplexDimensionSet dims = zst::lattice_poles(S, n_max);

    if (!out.empty()) {
        std::string csv = "n,re,im,residue_re,residue_im\n";
        for (int n = -dims.n_max; n <= dims.n_max; ++n) {
            const cplx w = dims.pole(n);
            csv += std::to_string(n) + "," + g17(w.real()) + "," +
                   g17(w.imag()) + "," + g17(dims.residue.real()) + "," +
                   g17(dims.residue.imag()) + "\n";
        }
        write_artifact(out, csv);
    }
    return "dims: " + std::to_string(2 * dims.n_max + 1) +
           " poles on Re s = " + g10(dims.D) + ", period " + g10(dims.p) +
           ", residue " + g10(dims.residue.real());
}

// ---------------------------------------------------------------- tube

std::string run_tube(const std::string& spec, const std::vector<double>& eps,
                     int n_max, const std::string& out) {
    const zst::FractalString S = load_string_spec(spec);
    const zst::ComplexDimensionSet dims = zst::lattice_poles(S, n_max);
    const cplx zeta_l_zero = zst::geometric_zeta(S, cplx(0.0, 0.0));

    std::string csv = "eps,direct,formula,error\n";
    std::string line;
    for (const double e : eps) {
        const double direct = zst::tube_volume(S, e);
        const double formula = zst::tube_formula_eval(dims, zeta_l_zero, e);
        csv += g17(e) + "," + g17(direct) + "," + g17(formula) + "," +
               g17(formula - direct) + "\n";
        if (line.empty()) {
            line = "tube eps=" + g10(e) + ": direct=" + f10(direct) +
                   " formula=" + f10(formula) +
                   " error=" + g10(formula - direct);
        }
    }
    if (eps.size() > 1)
        line += " (+" + std::to_string(eps.size() - 1) + " more rows)";
    if (!out.empty()) write_artifact(out, csv);
    return line;
}

// --------------------------------------------------------------- count

bool is_middle_thirds(const zst::FractalString& S) {
    return S.kind == zst::StringKind::SelfSimilar &&
           std::abs(S.r - 1.0 / 3.0) < 1e-12 && S.m == 2 &&
           std::abs(S.first_len - 1.0 / 3.0) < 1e-12;
}

std::string run_count(const std::string& spec, const std::string& kind,
                      const std::vector<double>& xs, int n_max,
                      const std::string& out) {
    const zst::FractalString S = load_string_spec(spec);
    if (!is_middle_thirds(S))
        throw zst::DomainError(
            "counting series are implemented for the middle-thirds string "
            "only (kind self_similar, r = l1 = 1/3, m = 2)");

    const bool geometric = kind == "geometric";
    std::string csv = "x,direct,formula\n";
    std::string line;
    for (const double x : xs) {
        const double direct =
            geometric ? static_cast<double>(zst::geometric_counting(S, x))
                      : static_cast<double>(zst::spectral_counting(S, x));
        const double formula = geometric
                                   ? zst::explicit_counting_geometric(x, n_max)
                                   : zst::explicit_counting_spectral(x, n_max);
        csv += g17(x) + "," + g17(direct) + "," + g17(formula) + "\n";
        if (line.empty()) {
            line = "count " + kind + " x=" + g10(x) + ": direct=" + g10(direct) +
                   " formula=" + g10(formula) +
                   " |diff|=" + g10(std::abs(formula - direct));
        }
    }
    if (xs.size() > 1)
        line += " (+" + std::to_string(xs.size() - 1) + " more rows)";
    if (!out.empty()) write_artifact(out, csv);
    return line;
}

// ------------------------------------------------------------ operator

std::string run_operator(const std::string& grid_text, const std::string& op,
                         double h_shift, int bumps, std::uint64_t seed,
                         const std::string& out) {
    double c = 0.0, t_min = 0.0, t_max = 0.0;
    long long n = 0;
    if (std::sscanf(grid_text.c_str(), "%lg,%lg,%lg,%lld", &c, &t_min, &t_max,
                    &n) != 4)
        throw zst::DomainError("grid must be 'c,t_min,t_max,n_points', got '" +
                               grid_text + "'");
    const zst::WeightedGrid grid =
        zst::make_grid(c, t_min, t_max, static_cast<int>(n));

    // Family bumps have half-support up to 3.2; keep their centers far
    // enough from both window edges.
    const double margin = 3.3;
    const double center_lo = t_min + margin;
    const double center_hi = t_max - margin;
    if (!(center_hi > center_lo))
        throw zst::DomainError(
            "window too short for the bump family: needs t_max - t_min > 6.6");
    const std::vector<zst::GridFunction> family =
        zst::bump_family(grid, bumps, seed, center_lo, center_hi);

    std::vector<cplx> samples(static_cast<std::size_t>(grid.n_points),
                              cplx(0.0, 0.0));
    double sup_a = t_max, sup_b = t_min;
    for (const zst::GridFunction& g : family) {
        for (std::size_t i = 0; i < samples.size(); ++i)
            samples[i] += g.samples[i];
        sup_a = std::min(sup_a, g.support_a);
        sup_b = std::max(sup_b, g.support_b);
    }
    const zst::GridFunction f =
        zst::make_grid_function(grid, std::move(samples), sup_a, sup_b);

    zst::GridFunction result = f;
    if (op == "sum") {
        result = zst::apply_dirichlet(f);
    } else if (op == "inverse") {
        result = zst::apply_moebius_inverse(f);
    } else if (op == "roundtrip") {
        result = zst::apply_moebius_inverse(zst::apply_dirichlet(f));
    } else if (op == "shift") {
        result = zst::shift(f, h_shift);
    }  // "norm" keeps f itself

    if (!out.empty()) {
        std::ostringstream csv;
        zst::export_csv(result, csv);
        write_artifact(out, csv.str());
    }
    return "operator " + op + ": bumps=" + std::to_string(bumps) +
           " seed=" + std::to_string(seed) +
           " norm_in=" + g10(zst::weighted_norm(f)) +
           " norm_out=" + g10(zst::weighted_norm(result)) +
           " overflow=" + (result.overflow ? "1" : "0") +
           " lost_tail=" + g10(result.lost_tail_bound);
}

// ---------------------------------------------------------------- scan

std::string scan_samples_csv_header() { return "c,T,t,re,im,abs\n"; }

void append_scan_samples(std::string& csv, const zst::LineScan& scan) {
    for (const zst::LineSample& smp : scan.samples) {
        csv += g17(scan.c) + "," + g17(scan.T) + "," + g17(smp.t) + "," +
               g17(smp.value.real()) + "," + g17(smp.value.imag()) + "," +
               g17(std::abs(smp.value)) + "\n";
    }
}

std::string sibling_json_path(const std::string& csv_path) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".json");
    return p.string();
}

std::string run_scan_single(double c, double T, double step, bool exclude_pole,
                            const std::string& out) {
    const zst::LineScan scan = zst::truncated_spectrum(c, T, step, exclude_pole);

    std::string csv = scan_samples_csv_header();
    append_scan_samples(csv, scan);
    write_artifact(out, csv);

    ojson j;
    j["kind"] = "scan_summary";
    j["c"] = scan.c;
    j["T"] = scan.T;
    j["step"] = scan.step;
    j["min_modulus"] = scan.min_modulus;
    j["argmin_t"] = scan.argmin_t;
    j["zeros"] = scan.zeros;
    j["verdict"] = scan.zeros.empty() ? "QuasiInvertibleUpToT"
                                      : "NotQuasiInvertible";
    j["pole_excluded"] = scan.pole_excluded;
    write_artifact(sibling_json_path(out), json_artifact(j));

    return "scan c=" + g10(c) + " T=" + g10(T) + ": " +
           std::to_string(scan.zeros.size()) + " zeros, min |zeta| = " +
           g10(scan.min_modulus) + " at t=" + g10(scan.argmin_t);
}

std::string run_scan_grid(const std::vector<double>& grid, double T,
                          const std::string& out) {
    const zst::ScanTable tab = zst::rh_scan(grid, T);

    // Sample rows for every line of the table, at the table's step.
    std::string csv = scan_samples_csv_header();
    int total_zeros = 0;
    for (const zst::ScanRow& row : tab.rows) {
        const zst::LineScan scan = zst::truncated_spectrum(row.c, T, 0.05);
        append_scan_samples(csv, scan);
        total_zeros += row.zero_count;
    }
    write_artifact(out, csv);

    ojson j;
    j["kind"] = "scan_table";
    j["T"] = tab.T;
    j["rows"] = ojson::array();
    for (const zst::ScanRow& row : tab.rows) {
        ojson r;
        r["c"] = row.c;
        r["min_modulus"] = row.min_modulus;
        r["zero_count"] = row.zero_count;
        r["verdict"] = verdict_name(row.verdict);
        j["rows"].push_back(std::move(r));
    }
    j["asymmetry"] = ojson::array();
    for (const zst::AsymmetryPair& p : tab.asymmetry) {
        ojson a;
        a["c_left"] = p.c_left;
        a["c_right"] = p.c_right;
        a["min_left"] = p.min_left;
        a["min_right"] = p.min_right;
        a["left_greater"] = p.min_left > p.min_right;
        j["asymmetry"].push_back(std::move(a));
    }
    write_artifact(sibling_json_path(out), json_artifact(j));

    return "scan grid of " + std::to_string(tab.rows.size()) + " lines, T=" +
           g10(T) + ": " + std::to_string(total_zeros) + " zeros, " +
           std::to_string(tab.asymmetry.size()) + " asymmetry pairs";
}

// -------------------------------------------------------------- report

std::optional<std::vector<double>> split_csv_doubles(const std::string& line,
                                                     std::size_t expect) {
    std::vector<double> vals;
    std::size_t start = 0;
    while (start <= line.size()) {
        std::size_t end = line.find(',', start);
        if (end == std::string::npos) end = line.size();
        const std::string cell = line.substr(start, end - start);
        if (cell.empty()) return std::nullopt;
        char* stop = nullptr;
        vals.push_back(std::strtod(cell.c_str(), &stop));
        if (stop != cell.c_str() + cell.size()) return std::nullopt;
        if (end == line.size()) break;
        start = end + 1;
    }
    if (vals.size() != expect) return std::nullopt;
    return vals;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw zst::DomainError("cannot open artifact '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

// Parse a CSV artifact body under a known header: `cols` values per row.
std::vector<std::vector<double>> parse_csv_rows(const std::string& path,
                                                const std::vector<std::string>& lines,
                                                std::size_t cols) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto vals = split_csv_doubles(lines[i], cols);
        if (!vals)
            throw zst::SchemaMismatch(path, "malformed row " +
                                                std::to_string(i + 1));
        rows.push_back(std::move(*vals));
    }
    if (rows.empty()) throw zst::SchemaMismatch(path, "no data rows");
    return rows;
}

ojson classify_artifact(const std::string& path,
                        std::vector<std::pair<double, double>>& scan_mins) {
    ojson entry;
    entry["path"] = path;

    if (std::filesystem::path(path).extension() == ".json") {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw zst::DomainError("cannot open artifact '" + path + "'");
        ojson content;
        try {
            content = ojson::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw zst::SchemaMismatch(path, e.what());
        }
        if (!content.is_object() || !content.contains("kind") ||
            !content.at("kind").is_string())
            throw zst::SchemaMismatch(path, "missing artifact \"kind\"");
        const auto kind = content.at("kind").get<std::string>();
        if (kind != "zeta_value" && kind != "string_summary" &&
            kind != "scan_summary" && kind != "scan_table")
            throw zst::SchemaMismatch(path, "unknown artifact kind \"" + kind +
                                                "\"");
        if (kind == "scan_summary") {
            try {
                scan_mins.emplace_back(content.at("c").get<double>(),
                                       content.at("min_modulus").get<double>());
            } catch (const nlohmann::json::exception& e) {
                throw zst::SchemaMismatch(path, e.what());
            }
        }
        entry["kind"] = kind;
        entry["content"] = std::move(content);
        return entry;
    }

    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) throw zst::SchemaMismatch(path, "empty file");
    const std::string& head = lines.front();

    if (head == "c,T,t,re,im,abs") {
        const auto rows = parse_csv_rows(path, lines, 6);
        double min_abs = rows.front()[5];
        for (const auto& r : rows) min_abs = std::min(min_abs, r[5]);
        entry["kind"] = "scan_samples";
        entry["rows"] = rows.size();
        entry["min_abs"] = min_abs;
        return entry;
    }
    if (head == "eps,direct,formula,error") {
        const auto rows = parse_csv_rows(path, lines, 4);
        double worst = 0.0;
        for (const auto& r : rows) worst = std::max(worst, std::abs(r[3]));
        entry["kind"] = "tube_table";
        entry["rows"] = rows.size();
        entry["max_abs_error"] = worst;
        return entry;
    }
    if (head == "x,direct,formula") {
        const auto rows = parse_csv_rows(path, lines, 3);
        double worst = 0.0;
        for (const auto& r : rows)
            worst = std::max(worst, std::abs(r[1] - r[2]));
        entry["kind"] = "count_table";
        entry["rows"] = rows.size();
        entry["max_abs_diff"] = worst;
        return entry;
    }
    if (head == "n,re,im,residue_re,residue_im") {
        const auto rows = parse_csv_rows(path, lines, 5);
        entry["kind"] = "dims_table";
        entry["rows"] = rows.size();
        return entry;
    }

    // Headerless grid-function CSV: every line is "t,re,im".
    std::vector<std::vector<double>> rows;
    rows.reserve(lines.size());
    for (const std::string& line : lines) {
        auto vals = split_csv_doubles(line, 3);
        if (!vals)
            throw zst::SchemaMismatch(
                path, "unrecognized artifact (first line '" +
                          head.substr(0, 40) + "')");
        rows.push_back(std::move(*vals));
    }
    entry["kind"] = "grid_function";
    entry["rows"] = rows.size();
    entry["t_min"] = rows.front()[0];
    entry["t_max"] = rows.back()[0];
    return entry;
}

std::string run_report(const std::vector<std::string>& paths,
                       const std::string& out) {
    ojson rep;
    rep["artifacts"] = ojson::array();
    rep["asymmetry"] = ojson::array();

    std::vector<std::pair<double, double>> scan_mins;
    for (const std::string& p : paths)
        rep["artifacts"].push_back(classify_artifact(p, scan_mins));

    // Mirror-line comparison across all collected scan summaries.
    for (std::size_t i = 0; i < scan_mins.size(); ++i) {
        for (std::size_t j = 0; j < scan_mins.size(); ++j) {
            const double cl = scan_mins[i].first;
            const double cr = scan_mins[j].first;
            if (cl < 0.5 - 1e-9 && std::abs(cl + cr - 1.0) < 1e-9) {
                ojson a;
                a["c_left"] = cl;
                a["c_right"] = cr;
                a["min_left"] = scan_mins[i].second;
                a["min_right"] = scan_mins[j].second;
                a["left_greater"] = scan_mins[i].second > scan_mins[j].second;
                rep["asymmetry"].push_back(std::move(a));
            }
        }
    }

    const std::string target = out.empty() ? "report.json" : out;
    write_artifact(target, json_artifact(rep));
    return "report: " + std::to_string(paths.size()) + " artifacts, " +
           std::to_string(rep["asymmetry"].size()) + " asymmetry pairs -> " +
           resolve_out(target).string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractal strings, complex dimensions, and zeta-line scans"};
    app.require_subcommand(1);

    std::string summary;

    // zeta
    auto* sc_zeta = app.add_subcommand("zeta", "evaluate zeta(s)");
    std::string zeta_s;
    std::string zeta_out;
    sc_zeta->add_option("--s", zeta_s, "point s, e.g. 2 or 0.5+14.13i")
        ->required();
    sc_zeta->add_option("--out", zeta_out, "JSON artifact path");
    sc_zeta->callback([&] { summary = run_zeta(zeta_s, zeta_out); });

    // string
    auto* sc_string =
        app.add_subcommand("string", "summarize a fractal string spec");
    std::string string_spec, string_s, string_out;
    std::optional<double> string_x;
    sc_string->add_option("--string,--spec", string_spec, "string spec JSON")
        ->required();
    sc_string->add_option("--s", string_s, "evaluate the geometric zeta here");
    sc_string->add_option("--x", string_x, "evaluate the length count at x");
    sc_string->add_option("--out", string_out, "JSON artifact path");
    sc_string->callback(
        [&] { summary = run_string(string_spec, string_s, string_x, string_out); });

    // dims
    auto* sc_dims =
        app.add_subcommand("dims", "complex dimensions of a lattice string");
    std::string dims_spec, dims_out;
    int dims_nmax = 10;
    sc_dims->add_option("--string,--spec", dims_spec, "string spec JSON")
        ->required();
    sc_dims->add_option("--nmax", dims_nmax, "pole window |n| <= nmax")
        ->check(CLI::PositiveNumber);
    sc_dims->add_option("--out", dims_out, "CSV artifact path");
    sc_dims->callback([&] { summary = run_dims(dims_spec, dims_nmax, dims_out); });

    // tube
    auto* sc_tube =
        app.add_subcommand("tube", "tube volume, direct vs truncated formula");
    std::string tube_spec, tube_out;
    std::vector<double> tube_eps;
    int tube_nmax = 200;
    sc_tube->add_option("--string,--spec", tube_spec, "string spec JSON")
        ->required();
    sc_tube->add_option("--eps", tube_eps, "inner radii (comma separated)")
        ->required()
        ->delimiter(',');
    sc_tube->add_option("--nmax", tube_nmax, "pole window |n| <= nmax")
        ->check(CLI::PositiveNumber);
    sc_tube->add_option("--out", tube_out, "CSV artifact path");
    sc_tube->callback(
        [&] { summary = run_tube(tube_spec, tube_eps, tube_nmax, tube_out); });

    // count
    auto* sc_count = app.add_subcommand(
        "count", "length/frequency counts, direct vs truncated series");
    std::string count_spec, count_kind, count_out;
    std::vector<double> count_x;
    int count_nmax = 400;
    sc_count->add_option("--string,--spec", count_spec, "string spec JSON")
        ->required();
    sc_count->add_option("--kind", count_kind, "geometric or spectral")
        ->required()
        ->check(CLI::IsMember({"geometric", "spectral"}));
    sc_count->add_option("--x", count_x, "evaluation points (comma separated)")
        ->required()
        ->delimiter(',');
    sc_count->add_option("--nmax", count_nmax, "series window |n| <= nmax")
        ->check(CLI::PositiveNumber);
    sc_count->add_option("--out", count_out, "CSV artifact path");
    sc_count->callback([&] {
        summary = run_count(count_spec, count_kind, count_x, count_nmax,
                            count_out);
    });

    // operator
    auto* sc_op = app.add_subcommand(
        "operator", "weighted-space operators on a seeded bump family");
    std::string op_grid, op_name, op_out;
    double op_h = 0.0;
    int op_bumps = 3;
    std::uint64_t op_seed = kDefaultSeed;
    sc_op->add_option("--grid", op_grid, "window 'c,t_min,t_max,n_points'")
        ->required();
    sc_op->add_option("--op", op_name, "norm, sum, inverse, roundtrip, shift")
        ->required()
        ->check(CLI::IsMember({"norm", "sum", "inverse", "roundtrip", "shift"}));
    sc_op->add_option("--shift", op_h, "shift distance (op shift)");
    sc_op->add_option("--bumps", op_bumps, "family size")
        ->check(CLI::PositiveNumber);
    sc_op->add_option("--seed", op_seed, "family seed (fixed default)");
    sc_op->add_option("--out", op_out, "CSV artifact path (t,re,im rows)");
    sc_op->callback([&] {
        summary = run_operator(op_grid, op_name, op_h, op_bumps, op_seed, op_out);
    });

    // scan
    auto* sc_scan =
        app.add_subcommand("scan", "vertical-line scan of zeta");
    std::optional<double> scan_c;
    std::vector<double> scan_grid;
    double scan_T = 0.0, scan_step = 0.05;
    bool scan_exclude = false;
    std::string scan_out;
    auto* opt_c = sc_scan->add_option("--c", scan_c, "single line Re s = c");
    auto* opt_grid =
        sc_scan->add_option("--grid", scan_grid, "several lines (comma separated)")
            ->delimiter(',');
    sc_scan->add_option("--T", scan_T, "scan height")->required();
    auto* opt_step = sc_scan->add_option("--step", scan_step, "sample spacing");
    auto* opt_excl = sc_scan->add_flag("--exclude-pole", scan_exclude,
                                       "skip |t| < 1e-3 (needed at c = 1)");
    sc_scan->add_option("--out", scan_out, "CSV artifact path (summary JSON lands beside it)")
        ->required();
    opt_c->excludes(opt_grid);
    opt_grid->excludes(opt_step);
    opt_grid->excludes(opt_excl);
    sc_scan->callback([&] {
        if (scan_c.has_value())
            summary = run_scan_single(*scan_c, scan_T, scan_step, scan_exclude,
                                      scan_out);
        else if (!scan_grid.empty())
            summary = run_scan_grid(scan_grid, scan_T, scan_out);
        else
            throw CLI::RequiredError("scan: one of --c / --grid");
    });

    // report
    auto* sc_report = app.add_subcommand(
        "report", "consolidate artifacts into one JSON document");
    std::vector<std::string> report_paths;
    std::string report_out;
    sc_report->add_option("paths", report_paths, "artifact files");
    sc_report->add_option("--out", report_out,
                          "report path (default report.json)");
    sc_report->callback([&] { summary = run_report(report_paths, report_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::fprintf(stderr, "usage error: %s\n", e.what());
        std::fprintf(stderr,
                     "run '%s --help' or '%s <subcommand> --help' for the "
                     "expected flags\n",
                     argv[0], argv[0]);
        return 1;
    } catch (const zst::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    std::printf("%s\n", summary.c_str());
    return 0;
}
