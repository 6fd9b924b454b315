#include "lpga/course_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "csv.hpp"

namespace lpga {

namespace {

std::string location_prefix(const std::filesystem::path& file, int row, int column) {
    std::string out = file.string();
    if (row > 0) out += ":" + std::to_string(row);
    if (column > 0) out += ":col " + std::to_string(column);
    return out;
}

/// Reads all lines, dropping fully blank ones but keeping 1-based original
/// line numbers for error reporting.
std::vector<std::pair<int, std::string>> read_lines(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw LoadError(LoadErrorKind::FileMissing, file, 0, 0, "cannot open file");
    }
    std::vector<std::pair<int, std::string>> lines;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (csv::trim(line).empty()) continue;
        lines.emplace_back(lineno, line);
    }
    return lines;
}

std::vector<std::string> split_or_throw(const std::filesystem::path& file, int row,
                                        const std::string& line) {
    auto fields = csv::split_line(line);
    if (!fields) {
        throw LoadError(LoadErrorKind::MalformedRow, file, row, 0, "unbalanced quote");
    }
    return *std::move(fields);
}

std::vector<Concept> read_concepts(const std::filesystem::path& file) {
    const auto lines = read_lines(file);
    if (lines.empty()) {
        throw LoadError(LoadErrorKind::MalformedRow, file, 1, 0, "file is empty");
    }

    const auto header = split_or_throw(file, lines[0].first, lines[0].second);
    const std::vector<std::string> expected = {"id", "title", "difficulty", "granularity",
                                               "rating"};
    if (header.size() != expected.size()) {
        throw LoadError(LoadErrorKind::MalformedRow, file, lines[0].first, 0,
                        "expected header `id,title,difficulty,granularity,rating`");
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (csv::trim(header[i]) != expected[i]) {
            throw LoadError(LoadErrorKind::MalformedRow, file, lines[0].first,
                            static_cast<int>(i + 1),
                            "expected header field `" + expected[i] + "`, got `" + header[i] +
                                "`");
        }
    }

    std::vector<Concept> concepts;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const int row = lines[li].first;
        const auto fields = split_or_throw(file, row, lines[li].second);
        if (fields.size() != 5) {
            throw LoadError(LoadErrorKind::MalformedRow, file, row, 0,
                            "expected 5 fields, got " + std::to_string(fields.size()));
        }
        const auto id = csv::parse_int(fields[0]);
        if (!id || *id < 0) {
            throw LoadError(LoadErrorKind::MalformedRow, file, row, 1,
                            "id must be a non-negative integer, got `" + fields[0] + "`");
        }
        Concept c;
        c.id = *id;
        c.title = fields[1];
        const struct {
            int column;
            const char* name;
            double* dest;
        } numeric[] = {
            {3, "difficulty", &c.difficulty},
            {4, "granularity", &c.granularity},
            {5, "rating", &c.rating},
        };
        for (const auto& f : numeric) {
            const auto v = csv::parse_double(fields[f.column - 1]);
            if (!v || !std::isfinite(*v)) {
                throw LoadError(LoadErrorKind::MalformedRow, file, row, f.column,
                                std::string(f.name) + " must be a finite real, got `" +
                                    fields[f.column - 1] + "`");
            }
            *f.dest = *v;
        }
        if (!(c.rating > 0.0)) {
            throw LoadError(LoadErrorKind::InvalidValue, file, row, 5, "rating must be > 0");
        }
        if (!(c.granularity > 0.0)) {
            throw LoadError(LoadErrorKind::InvalidValue, file, row, 4,
                            "granularity must be > 0");
        }
        if (c.difficulty < 0.0) {
            throw LoadError(LoadErrorKind::InvalidValue, file, row, 3,
                            "difficulty must be >= 0");
        }
        concepts.push_back(std::move(c));
    }
    if (concepts.empty()) {
        throw LoadError(LoadErrorKind::MalformedRow, file, lines[0].first, 0,
                        "no concept rows after header");
    }

    const int n = static_cast<int>(concepts.size());
    std::vector<int> seen_row(static_cast<std::size_t>(n), 0);
    for (std::size_t li = 0; li < concepts.size(); ++li) {
        const int id = concepts[li].id;
        const int row = lines[li + 1].first;
        if (id >= n) {
            throw LoadError(LoadErrorKind::IdSetInvalid, file, row, 1,
                            "id " + std::to_string(id) + " outside {0, ..., " +
                                std::to_string(n - 1) + "} for " + std::to_string(n) +
                                " concepts");
        }
        if (seen_row[id] != 0) {
            throw LoadError(LoadErrorKind::IdSetInvalid, file, row, 1,
                            "duplicate id " + std::to_string(id) + " (first on row " +
                                std::to_string(seen_row[id]) + ")");
        }
        seen_row[id] = row;
    }
    return concepts;
}

RelationDegreeMatrix read_rdm(const std::filesystem::path& file, int n) {
    auto lines = read_lines(file);
    if (lines.size() == static_cast<std::size_t>(n) + 1) {
        lines.erase(lines.begin());  // optional header row of ids
    } else if (lines.size() != static_cast<std::size_t>(n)) {
        throw LoadError(LoadErrorKind::DimensionMismatch, file, 0, 0,
                        "expected " + std::to_string(n) + " data rows (optionally preceded by a "
                        "header row), got " + std::to_string(lines.size()));
    }

    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        const int row = lines[r].first;
        const auto fields = split_or_throw(file, row, lines[r].second);
        if (fields.size() != static_cast<std::size_t>(n)) {
            throw LoadError(LoadErrorKind::DimensionMismatch, file, row, 0,
                            "expected " + std::to_string(n) + " columns, got " +
                                std::to_string(fields.size()));
        }
        for (int c = 0; c < n; ++c) {
            const auto v = csv::parse_double(fields[c]);
            if (!v || !std::isfinite(*v)) {
                throw LoadError(LoadErrorKind::MalformedRow, file, row, c + 1,
                                "relation degree must be a finite real, got `" + fields[c] +
                                    "`");
            }
            if (r != c && !(*v >= 0.0 && *v <= 1.0)) {
                throw LoadError(LoadErrorKind::ValueOutOfRange, file, row, c + 1,
                                "relation degree " + std::to_string(*v) + " outside [0, 1]");
            }
            values.push_back(*v);
        }
    }
    return RelationDegreeMatrix(n, std::move(values));
}

}  // namespace

LoadError::LoadError(LoadErrorKind kind, std::filesystem::path file, int row, int column,
                     const std::string& detail)
    : std::runtime_error(location_prefix(file, row, column) + ": " + detail),
      kind_(kind),
      file_(std::move(file)),
      row_(row),
      column_(column) {}

Course load_course(const std::filesystem::path& course_file,
                   const std::filesystem::path& rdm_file, std::vector<std::string>* warnings) {
    std::vector<Concept> concepts = read_concepts(course_file);
    RelationDegreeMatrix rdm = read_rdm(rdm_file, static_cast<int>(concepts.size()));
    if (warnings && !rdm.is_symmetric()) {
        warnings->push_back(rdm_file.string() +
                            ": relation-degree matrix is asymmetric; lookups use "
                            "[current][previous]");
    }
    return Course(std::move(concepts), std::move(rdm));
}

void save_course(const Course& course, const std::filesystem::path& course_file,
                 const std::filesystem::path& rdm_file) {
    {
        std::ofstream out(course_file);
        if (!out) {
            throw LoadError(LoadErrorKind::FileMissing, course_file, 0, 0,
                            "cannot open file for writing");
        }
        out << "id,title,difficulty,granularity,rating\n";
        for (const Concept& c : course.concepts()) {
            out << c.id << ',' << csv::escape(c.title) << ',' << csv::format_double(c.difficulty)
                << ',' << csv::format_double(c.granularity) << ','
                << csv::format_double(c.rating) << '\n';
        }
    }
    {
        std::ofstream out(rdm_file);
        if (!out) {
            throw LoadError(LoadErrorKind::FileMissing, rdm_file, 0, 0,
                            "cannot open file for writing");
        }
        const int n = course.size();
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                if (c) out << ',';
                out << csv::format_double(course.rdm().at(r, c));
            }
            out << '\n';
        }
    }
}

}  // namespace lpga
