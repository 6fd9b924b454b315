#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpga/course.hpp"

namespace lpga {

enum class LoadErrorKind {
    FileMissing,
    MalformedRow,       // wrong column count, unparsable field, bad header
    InvalidValue,       // parses but violates a concept invariant (rating <= 0, ...)
    IdSetInvalid,       // duplicate or missing concept ids
    DimensionMismatch,  // relation-degree matrix shape disagrees with concept count
    ValueOutOfRange,    // off-diagonal relation degree outside [0, 1]
};

/// A structured rejection of an input file. `row`/`column` are 1-based file
/// coordinates; 0 means not applicable.
class LoadError : public std::runtime_error {
public:
    LoadError(LoadErrorKind kind, std::filesystem::path file, int row, int column,
              const std::string& detail);

    LoadErrorKind kind() const { return kind_; }
    const std::filesystem::path& file() const { return file_; }
    int row() const { return row_; }
    int column() const { return column_; }

private:
    LoadErrorKind kind_;
    std::filesystem::path file_;
    int row_;
    int column_;
};

/// Reads a course from two CSV files.
///
/// Course file: header `id,title,difficulty,granularity,rating`, then one row
/// per concept (any id order). Titles may be double-quoted; `""` escapes a
/// quote. UTF-8, `.` decimal separator.
///
/// Relation-degree file: n rows of n comma-separated reals, with an optional
/// leading header row of ids. File row c, column p holds the degree used when
/// the path moves from concept p to concept c.
///
/// Every malformed input is rejected with a LoadError carrying the offending
/// file position; `load_course` never aborts. Accepted data always satisfies
/// the Course invariants. An asymmetric matrix is accepted with a note pushed
/// to `warnings` (when given), since a fixed lookup orientation makes
/// asymmetry meaningful rather than wrong.
Course load_course(const std::filesystem::path& course_file,
                   const std::filesystem::path& rdm_file,
                   std::vector<std::string>* warnings = nullptr);

/// Writes `course` back out in the `load_course` formats, with enough float
/// precision that reloading reproduces the course exactly.
void save_course(const Course& course, const std::filesystem::path& course_file,
                 const std::filesystem::path& rdm_file);

}  // namespace lpga
