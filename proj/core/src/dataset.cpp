#include "gadic/dataset.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gadic/expansion.hpp"
#include "gadic/lambda.hpp"

namespace gadic {

namespace {

void require_table_spec(const TableSpec& spec) {
    if (spec.bases.empty())
        throw std::invalid_argument("table needs at least one base");
    for (std::int64_t g : spec.bases)
        if (g < 2)
            throw std::invalid_argument("table bases must be >= 2");
    if (spec.k_max < 1)
        throw std::invalid_argument("k_max must be >= 1");
}

std::vector<std::vector<Integer>> table_values(const TableSpec& spec) {
    std::vector<std::vector<Integer>> rows;
    rows.reserve(static_cast<std::size_t>(spec.k_max));
    for (std::int64_t k = 1; k <= spec.k_max; ++k) {
        std::vector<Integer> row;
        row.reserve(spec.bases.size());
        for (std::int64_t g : spec.bases)
            row.push_back(lambda(g, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string emit_lambda_table(const TableSpec& spec) {
    require_table_spec(spec);
    const auto rows = table_values(spec);

    if (spec.format == TableSpec::Format::csv) {
        std::ostringstream out;
        out << 'k';
        for (std::int64_t g : spec.bases)
            out << ',' << g;
        out << '\n';
        for (std::int64_t k = 1; k <= spec.k_max; ++k) {
            out << k;
            for (const Integer& v : rows[static_cast<std::size_t>(k - 1)])
                out << ',' << v;
            out << '\n';
        }
        return out.str();
    }

    if (spec.format == TableSpec::Format::json) {
        nlohmann::ordered_json doc;
        doc["bases"] = spec.bases;
        doc["k_max"] = spec.k_max;
        auto& values = doc["values"];
        values = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json json_row = nlohmann::ordered_json::array();
            for (const Integer& v : row)
                json_row.push_back(v.str());
            values.push_back(std::move(json_row));
        }
        return doc.dump(2) + "\n";
    }

    // Aligned text: right-justified cells, column widths from the data.
    std::vector<std::size_t> widths(spec.bases.size() + 1, 1);
    for (std::size_t c = 0; c < spec.bases.size(); ++c)
        widths[c + 1] = std::to_string(spec.bases[c]).size();
    widths[0] = std::max(widths[0], std::to_string(spec.k_max).size());
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c + 1] = std::max(widths[c + 1], row[c].str().size());

    std::ostringstream out;
    const auto cell = [&out](const std::string& text, std::size_t width, bool first) {
        if (!first)
            out << "  ";
        out << std::string(width - text.size(), ' ') << text;
    };
    cell("k", widths[0], true);
    for (std::size_t c = 0; c < spec.bases.size(); ++c)
        cell(std::to_string(spec.bases[c]), widths[c + 1], false);
    out << '\n';
    for (std::int64_t k = 1; k <= spec.k_max; ++k) {
        cell(std::to_string(k), widths[0], true);
        const auto& row = rows[static_cast<std::size_t>(k - 1)];
        for (std::size_t c = 0; c < row.size(); ++c)
            cell(row[c].str(), widths[c + 1], false);
        out << '\n';
    }
    return out.str();
}

std::string emit_length_vs_g(const Integer& n, std::int64_t g_lo, std::int64_t g_hi) {
    if (n == 0)
        throw std::invalid_argument("n must be nonzero");
    if (g_lo < 2 || g_lo > g_hi)
        throw std::invalid_argument("need 2 <= g_lo <= g_hi");
    std::ostringstream out;
    out << "g,length\n";
    for (std::int64_t g = g_lo; g <= g_hi; ++g)
        out << g << ',' << g_length(n, g) << '\n';
    return out.str();
}

std::string emit_length_histogram(std::int64_t g, std::int64_t n_max) {
    if (g < 2)
        throw std::invalid_argument("base must be >= 2");
    if (n_max < 1)
        throw std::invalid_argument("n_max must be >= 1");
    std::ostringstream out;
    out << "series,x,y\n";
    for (std::int64_t n = 1; n <= n_max; ++n)
        out << "length," << n << ',' << g_length(n, g) << '\n';
    for (std::int64_t k = 1;; ++k) {
        const Integer v = lambda(g, k);
        if (v > n_max)
            break;
        out << "lambda," << k << ',' << v << '\n';
    }
    return out.str();
}

std::string emit_bfile(std::int64_t g, std::int64_t count) {
    if (count < 1)
        throw std::invalid_argument("count must be >= 1");
    std::ostringstream out;
    for (std::int64_t k = 1; k <= count; ++k)
        out << k << ' ' << lambda(g, k) << '\n';
    return out.str();
}

std::vector<std::pair<std::int64_t, Integer>> parse_bfile(const std::string& text) {
    std::vector<std::pair<std::int64_t, Integer>> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto space = line.find(' ');
        if (space == std::string::npos)
            throw std::invalid_argument("malformed b-file line: '" + line + "'");
        records.emplace_back(to_int64(parse_integer(line.substr(0, space))),
                             parse_integer(line.substr(space + 1)));
    }
    return records;
}

}  // namespace gadic
