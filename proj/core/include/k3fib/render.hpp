#pragma once

#include <string>
#include <vector>

namespace k3fib {

enum class Format { Markdown, Csv };

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

// "md" or "csv"; throws DomainError otherwise.
Format parse_format(const std::string& s);
// K3FIB_FORMAT when set, else Markdown.
Format default_format();

// Markdown escapes '|' inside cells as "\|"; CSV quotes cells containing ',', '"' or newlines.
std::string render_table(const Table& t, Format f);

}  // namespace k3fib
