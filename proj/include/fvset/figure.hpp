#pragma once

/**
 * @file figure.hpp
 * @brief Classification grids for plotting, with CSV and JSON writers.
 *
 * CSV columns per figure:
 *   pi4_12 : f1,f2,status,reason      for 0 <= f1, f2 <= x_max
 *   set_A  : x,y,status               for 0 <= x, y <= x_max
 *   g23    : g2,g3,status,strip       for 0 <= g2, g3 <= x_max
 * Rows are in lexicographic order of the coordinates.
 */

#include "fvset/gtheorem.hpp"
#include "fvset/parallel.hpp"
#include "fvset/sets.hpp"
#include "fvset/striplab.hpp"
#include "fvset/version.hpp"

#include <json.hpp>

#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fvset {

enum class FigureId { pi4_12, set_A, g23 };

inline std::string_view to_string(FigureId f) {
    switch (f) {
        case FigureId::pi4_12: return "pi4_12";
        case FigureId::set_A: return "set_A";
        case FigureId::g23: return "g23";
    }
    return "";
}

inline std::optional<FigureId> parse_figure_id(std::string_view s) {
    if (s == "pi4_12") return FigureId::pi4_12;
    if (s == "set_A") return FigureId::set_A;
    if (s == "g23") return FigureId::g23;
    return std::nullopt;
}

struct FigureRow {
    Integer u;
    Integer v;
    Status status = Status::unknown;
    std::string extra;  // reason (pi4_12), strip position (g23), empty (set_A)
};

struct FigureDataset {
    FigureId figure = FigureId::set_A;
    Integer x_max = 0;
    std::vector<FigureRow> rows;

    std::vector<std::string> columns() const {
        switch (figure) {
            case FigureId::pi4_12: return {"f1", "f2", "status", "reason"};
            case FigureId::set_A: return {"x", "y", "status"};
            case FigureId::g23: return {"g2", "g3", "status", "strip"};
        }
        return {};
    }
};

inline FigureRow classify_figure_point(FigureId fig, const Integer& u, const Integer& v) {
    switch (fig) {
        case FigureId::pi4_12: {
            Verdict r = member_Pi4_12(u, v);
            return {u, v, r.status, r.reason};
        }
        case FigureId::set_A: return {u, v, member_A(u, v).status, {}};
        case FigureId::g23:
            return {u, v, member_G23(u, v).status, std::string(to_string(g23_strip_position(u, v)))};
    }
    return {u, v, Status::unknown, {}};
}

inline FigureDataset make_figure(FigureId fig, const Integer& x_max, unsigned shards = 1) {
    if (x_max < 1) throw std::domain_error("make_figure: x_max must be at least 1");
    FigureDataset ds{fig, x_max, {}};
    auto parts = sharded<std::vector<FigureRow>>(
        Integer(0), x_max, shards, [&](const Integer& lo, const Integer& hi, std::vector<FigureRow>& out) {
            for (Integer u = lo; u <= hi; ++u)
                for (Integer v = 0; v <= x_max; ++v) out.push_back(classify_figure_point(fig, u, v));
        });
    for (auto& p : parts) ds.rows.insert(ds.rows.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return ds;
}

inline void write_csv(std::ostream& os, const FigureDataset& ds) {
    const auto cols = ds.columns();
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& r : ds.rows) {
        os << r.u << ',' << r.v << ',' << to_string(r.status);
        if (ds.figure != FigureId::set_A) os << ',' << r.extra;
        os << '\n';
    }
}

/// Integer as a JSON number when it fits in 64 bits, otherwise as a decimal string.
inline nlohmann::ordered_json json_integer(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline nlohmann::ordered_json to_json(const FigureDataset& ds) {
    nlohmann::ordered_json j;
    j["meta"] = {{"figure", std::string(to_string(ds.figure))},
                 {"x_max", json_integer(ds.x_max)},
                 {"columns", ds.columns()},
                 {"tool_version", kVersion}};
    auto rows = nlohmann::ordered_json::array();
    const auto cols = ds.columns();
    for (const auto& r : ds.rows) {
        nlohmann::ordered_json row;
        row[cols[0]] = json_integer(r.u);
        row[cols[1]] = json_integer(r.v);
        row["status"] = std::string(to_string(r.status));
        if (ds.figure != FigureId::set_A) row[cols[3]] = r.extra;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline void write_json(std::ostream& os, const FigureDataset& ds) { os << to_json(ds).dump(1) << '\n'; }

}  // namespace fvset
