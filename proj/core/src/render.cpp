#include "k3fib/render.hpp"

#include <cstdlib>

#include "k3fib/arith.hpp"

namespace k3fib {

Format parse_format(const std::string& s) {
    if (s == "md") return Format::Markdown;
    if (s == "csv") return Format::Csv;
    throw DomainError("unknown format '" + s + "' (expected md or csv)");
}

Format default_format() {
    const char* env = std::getenv("K3FIB_FORMAT");
    if (env && *env) return parse_format(env);
    return Format::Markdown;
}

namespace {

std::string md_cell(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch;
    }
    return out;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string render_table(const Table& t, Format f) {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        if (f == Format::Csv) {
            for (size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
        } else {
            out += "|";
            for (const auto& c : cells) out += " " + md_cell(c) + " |";
        }
        out += "\n";
    };
    line(t.headers);
    if (f == Format::Markdown) {
        out += "|";
        for (size_t i = 0; i < t.headers.size(); ++i) out += "---|";
        out += "\n";
    }
    for (const auto& r : t.rows) {
        if (r.size() != t.headers.size()) throw DomainError("table row width differs from header width");
        line(r);
    }
    return out;
}

}  // namespace k3fib
