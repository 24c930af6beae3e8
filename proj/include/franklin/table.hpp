#pragma once

#include <future>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "franklin/lebesgue.hpp"

namespace franklin {

struct TableCell {
    int N{};
    int nu{};
    NormReport report;
};

/// All norms for N = 2..n_max, nu = 0..floor((N-1)/2). With `parallel`,
/// rows are computed concurrently and gathered in index order, so the
/// output is byte-identical to the serial mode.
inline std::vector<TableCell> compute_cells(int n_max, bool parallel = false) {
    if (n_max < 2) throw std::domain_error("compute_cells: n_max < 2");
    const auto compute_row = [](int N) {
        std::vector<TableCell> row;
        for (int nu = 0; 2 * nu <= N - 1; ++nu)
            row.push_back({N, nu, projection_norm(KnotConfig(N - nu, nu))});
        return row;
    };
    std::vector<TableCell> cells;
    if (parallel) {
        std::vector<std::future<std::vector<TableCell>>> futures;
        for (int N = 2; N <= n_max; ++N)
            futures.push_back(std::async(std::launch::async, compute_row, N));
        for (auto& f : futures)
            for (auto& c : f.get()) cells.push_back(std::move(c));
    } else {
        for (int N = 2; N <= n_max; ++N)
            for (auto& c : compute_row(N)) cells.push_back(std::move(c));
    }
    return cells;
}

inline std::string right_align(const std::string& s, size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

/// Matrix layout: one row per N, one column per nu.
inline std::string render_table_text(const std::vector<TableCell>& cells, int digits = 8) {
    const size_t width = static_cast<size_t>(digits) + 2;
    int max_nu = 0;
    for (const auto& c : cells) max_nu = std::max(max_nu, c.nu);
    std::ostringstream os;
    os << right_align("N", 5);
    for (int nu = 0; nu <= max_nu; ++nu) os << "  " << right_align(std::to_string(nu), width);
    os << '\n';
    int current = -1;
    for (const auto& c : cells) {
        if (c.N != current) {
            if (current != -1) os << '\n';
            current = c.N;
            os << right_align(std::to_string(c.N), 5);
        }
        os << "  " << right_align(decimal_string(c.report.norm, digits), width);
    }
    os << '\n';
    return os.str();
}

inline std::string render_table_csv(const std::vector<TableCell>& cells, int digits = 8) {
    std::ostringstream os;
    os << "N,nu,norm_decimal,norm_num,norm_den,argmax_j,below_gamma\n";
    for (const auto& c : cells)
        os << c.N << ',' << c.nu << ',' << decimal_string(c.report.norm, digits) << ','
           << numerator(c.report.norm).str() << ',' << denominator(c.report.norm).str() << ','
           << c.report.argmax << ',' << (c.report.below_gamma ? "true" : "false") << '\n';
    return os.str();
}

inline nlohmann::ordered_json cell_json(const TableCell& c, int digits) {
    return nlohmann::ordered_json{
        {"N", c.N},
        {"nu", c.nu},
        {"norm_decimal", decimal_string(c.report.norm, digits)},
        {"norm_num", numerator(c.report.norm).str()},
        {"norm_den", denominator(c.report.norm).str()},
        {"argmax_j", c.report.argmax},
        {"below_gamma", c.report.below_gamma},
    };
}

inline std::string render_table_json(const std::vector<TableCell>& cells, int digits = 8) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : cells) arr.push_back(cell_json(c, digits));
    return arr.dump(2) + "\n";
}

inline std::string render_norm_text(const NormReport& rep, bool verbose, int digits = 8) {
    std::ostringstream os;
    os << "config: n=" << rep.cfg.n << " nu=" << rep.cfg.nu << " N=" << rep.cfg.points() << '\n';
    os << "norm exact: " << numerator(rep.norm).str() << '/' << denominator(rep.norm).str()
       << '\n';
    os << "norm decimal: " << decimal_string(rep.norm, digits) << '\n';
    os << "argmax j: " << rep.argmax << '\n';
    if (verbose)
        for (size_t j = 0; j < rep.kappas.size(); ++j)
            os << "kappa[" << j << "]: " << numerator(rep.kappas[j]).str() << '/'
               << denominator(rep.kappas[j]).str() << " = " << decimal_string(rep.kappas[j], digits)
               << '\n';
    os << "below gamma: " << (rep.below_gamma ? "yes" : "no") << '\n';
    return os.str();
}

inline std::string render_norm_csv(const NormReport& rep, int digits = 8) {
    const TableCell c{rep.cfg.points(), rep.cfg.nu, rep};
    return render_table_csv({c}, digits);
}

inline std::string render_norm_json(const NormReport& rep, bool verbose, int digits = 8) {
    const TableCell c{rep.cfg.points(), rep.cfg.nu, rep};
    nlohmann::ordered_json j = cell_json(c, digits);
    if (verbose) {
        nlohmann::ordered_json kappas = nlohmann::ordered_json::array();
        for (const auto& k : rep.kappas)
            kappas.push_back(nlohmann::ordered_json{{"num", numerator(k).str()},
                                                    {"den", denominator(k).str()},
                                                    {"decimal", decimal_string(k, digits)}});
        j["kappas"] = std::move(kappas);
    }
    return j.dump(2) + "\n";
}

inline std::string render_sweep_csv(const std::vector<SweepPoint>& points, int digits = 8) {
    std::ostringstream os;
    os << "N,norm_decimal,gap_to_gamma\n";
    for (const auto& p : points)
        os << p.N << ',' << decimal_string(p.norm, digits) << ',' << p.gap << '\n';
    if (!points.empty())
        os << "# final gap |norm - gamma| at N=" << points.back().N << ": " << points.back().gap
           << '\n';
    return os.str();
}

}  // namespace franklin
