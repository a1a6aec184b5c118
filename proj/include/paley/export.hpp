#pragma once

#include <sstream>
#include <string>

#include "paley/graph.hpp"

namespace paley {

enum class ExportFormat { edge_list, dot, json };

inline ExportFormat parse_export_format(const std::string& s) {
    if (s == "edge-list") return ExportFormat::edge_list;
    if (s == "dot") return ExportFormat::dot;
    if (s == "json") return ExportFormat::json;
    throw std::invalid_argument("unknown export format: " + s);
}

/// Deterministic serialization: edges listed as u < v pairs in
/// lexicographic order.
inline std::string export_graph(const Graph& g, ExportFormat format) {
    std::ostringstream out;
    int64 n = g.vertex_count();
    switch (format) {
        case ExportFormat::edge_list:
            for (int64 u = 0; u < n; ++u)
                for (int64 v = u + 1; v < n; ++v)
                    if (g.adjacent(u, v)) out << u << ' ' << v << '\n';
            break;
        case ExportFormat::dot:
            out << "graph G {\n";
            for (int64 u = 0; u < n; ++u)
                for (int64 v = u + 1; v < n; ++v)
                    if (g.adjacent(u, v)) out << "  " << u << " -- " << v << ";\n";
            out << "}\n";
            break;
        case ExportFormat::json: {
            out << "{\"n\":" << n << ",\"edges\":[";
            bool first = true;
            for (int64 u = 0; u < n; ++u)
                for (int64 v = u + 1; v < n; ++v)
                    if (g.adjacent(u, v)) {
                        if (!first) out << ',';
                        first = false;
                        out << '[' << u << ',' << v << ']';
                    }
            out << "]}";
            break;
        }
    }
    return out.str();
}

}  // namespace paley
