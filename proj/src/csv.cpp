#include "primewalk/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "primewalk/io.hpp"

namespace primewalk {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// snapshots.csv
// ---------------------------------------------------------------------------

static const char* snapshot_columns[] = {
    "n", "x", "y", "area", "z_max", "bbox_min_x", "bbox_max_x",
    "bbox_min_y", "bbox_max_y", "interior_unvisited", "pi_n",
};
constexpr std::size_t snapshot_column_count = 11;

std::string snapshots_csv(const std::vector<WalkSnapshot>& snapshots) {
    std::string out;
    for (std::size_t i = 0; i < snapshot_column_count; ++i) {
        if (i) out += ',';
        out += snapshot_columns[i];
    }
    out += '\n';
    for (const WalkSnapshot& s : snapshots) {
        out += std::to_string(s.n);
        out += ',';
        out += std::to_string(s.position.x);
        out += ',';
        out += std::to_string(s.position.y);
        out += ',';
        out += std::to_string(s.area);
        out += ',';
        out += std::to_string(s.z_max);
        out += ',';
        out += std::to_string(s.bbox.min_x);
        out += ',';
        out += std::to_string(s.bbox.max_x);
        out += ',';
        out += std::to_string(s.bbox.min_y);
        out += ',';
        out += std::to_string(s.bbox.max_y);
        out += ',';
        out += std::to_string(s.interior_unvisited);
        out += ',';
        out += std::to_string(s.prime_count);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

int64_t parse_i64(const std::string& field, const char* column, std::size_t row) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(field.c_str(), &end, 10);
    if (field.empty() || end != field.c_str() + field.size() || errno == ERANGE)
        throw CsvError("snapshots.csv: row " + std::to_string(row) + ", field '" +
                       column + "': not an integer: '" + field + "'");
    return v;
}

uint64_t parse_u64(const std::string& field, const char* column, std::size_t row) {
    errno = 0;
    char* end = nullptr;
    if (!field.empty() && field[0] == '-')
        throw CsvError("snapshots.csv: row " + std::to_string(row) + ", field '" +
                       column + "': negative value: '" + field + "'");
    unsigned long long v = std::strtoull(field.c_str(), &end, 10);
    if (field.empty() || end != field.c_str() + field.size() || errno == ERANGE)
        throw CsvError("snapshots.csv: row " + std::to_string(row) + ", field '" +
                       column + "': not an integer: '" + field + "'");
    return v;
}

} // namespace

std::vector<WalkSnapshot> parse_snapshots_csv(const std::string& text) {
    std::vector<WalkSnapshot> snapshots;
    std::size_t pos = 0, row = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;

        std::vector<std::string> fields = split_line(line);
        if (!header_seen) {
            if (fields.size() != snapshot_column_count)
                throw CsvError("snapshots.csv: header has " + std::to_string(fields.size()) +
                               " columns, expected " + std::to_string(snapshot_column_count));
            for (std::size_t i = 0; i < snapshot_column_count; ++i)
                if (fields[i] != snapshot_columns[i])
                    throw CsvError("snapshots.csv: header column " + std::to_string(i + 1) +
                                   " is '" + fields[i] + "', expected '" +
                                   snapshot_columns[i] + "'");
            header_seen = true;
            continue;
        }
        ++row;
        if (fields.size() != snapshot_column_count)
            throw CsvError("snapshots.csv: row " + std::to_string(row) + " has " +
                           std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(snapshot_column_count));
        WalkSnapshot s;
        s.n = parse_u64(fields[0], "n", row);
        s.position.x = parse_i64(fields[1], "x", row);
        s.position.y = parse_i64(fields[2], "y", row);
        s.area = parse_u64(fields[3], "area", row);
        s.z_max = parse_u64(fields[4], "z_max", row);
        s.bbox.min_x = parse_i64(fields[5], "bbox_min_x", row);
        s.bbox.max_x = parse_i64(fields[6], "bbox_max_x", row);
        s.bbox.min_y = parse_i64(fields[7], "bbox_min_y", row);
        s.bbox.max_y = parse_i64(fields[8], "bbox_max_y", row);
        s.interior_unvisited = parse_u64(fields[9], "interior_unvisited", row);
        s.prime_count = parse_u64(fields[10], "pi_n", row);
        snapshots.push_back(s);
    }
    if (!header_seen)
        throw CsvError("snapshots.csv: missing header row");
    return snapshots;
}

// ---------------------------------------------------------------------------
// Remaining tables
// ---------------------------------------------------------------------------

std::string benford_csv(const LeadingDigitHistogram& hist) {
    std::string out = "digit,count,proportion,benford_expected,abs_deviation\n";
    for (int d = 1; d <= 9; ++d) {
        out += std::to_string(d);
        out += ',';
        out += std::to_string(hist.counts[d]);
        out += ',';
        out += format_double(hist.proportions[d]);
        out += ',';
        out += format_double(hist.benford[d]);
        out += ',';
        out += format_double(std::abs(hist.proportions[d] - hist.benford[d]));
        out += '\n';
    }
    return out;
}

std::string zhist_csv(const ZHistogram& hist) {
    std::string out;
    if (hist.fit) {
        out += "# fit: b=" + format_double(hist.fit->b) + ", a=" + format_double(hist.fit->a) +
               ", range=" + std::to_string(hist.fit->z_lo) + ".." +
               std::to_string(hist.fit->z_hi) + "\n";
    } else {
        out += "# fit: unavailable (fewer than 2 points)\n";
    }
    out += "z,count\n";
    for (const auto& [z, count] : hist.counts) {
        out += std::to_string(z);
        out += ',';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

std::string boxdim_csv(const BoxCountSeries& series) {
    std::string out;
    if (series.d_f) {
        out += "# d_f=" + format_double(*series.d_f) +
               ", residual=" + format_double(series.residual) + "\n";
    } else {
        out += "# d_f=unavailable (fewer than 2 epsilons)\n";
    }
    out += "epsilon,occupied\n";
    for (const BoxCountEntry& e : series.entries) {
        out += std::to_string(e.epsilon);
        out += ',';
        out += std::to_string(e.occupied);
        out += '\n';
    }
    return out;
}

std::string ratios_csv(const RatioSeries& series) {
    std::string out =
        "n,pi_n,n_over_ln_n,area_pw,area_prw_mean,pi_over_area_pw,pi_over_area_prw,"
        "prw_over_pw,z_max_pw,z_max_prw_mean\n";
    for (const RatioPoint& p : series.points) {
        out += std::to_string(p.n);
        out += ',';
        out += std::to_string(p.pi_n);
        out += ',';
        out += format_double(p.n_over_ln_n);
        out += ',';
        out += std::to_string(p.area_pw);
        out += ',';
        out += format_double(p.area_prw_mean);
        out += ',';
        out += format_double(p.pi_over_area_pw);
        out += ',';
        out += format_double(p.pi_over_area_prw);
        out += ',';
        out += format_double(p.prw_over_pw);
        out += ',';
        out += std::to_string(p.z_max_pw);
        out += ',';
        out += format_double(p.z_max_prw_mean);
        out += '\n';
    }
    return out;
}

std::string gaps_csv(const GapHistogram& hist) {
    std::string out = "gap,count\n";
    for (const auto& [gap, count] : hist.counts) {
        out += std::to_string(gap);
        out += ',';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

std::string pairs_csv(const PairMatrix& matrix) {
    std::string out = "d1,d2,count,expected_uniform,deviation\n";
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out += std::to_string(PairMatrix::digits[i]);
            out += ',';
            out += std::to_string(PairMatrix::digits[j]);
            out += ',';
            out += std::to_string(matrix.counts[i][j]);
            out += ',';
            out += format_double(matrix.expected_uniform());
            out += ',';
            out += format_double(matrix.deviation(i, j));
            out += '\n';
        }
    }
    return out;
}

std::string areafit_csv(const AreaSlopeFit& fit, uint64_t n_lo, uint64_t n_hi) {
    std::string out = "b,std_error,points,n_lo,n_hi\n";
    out += format_double(fit.b);
    out += ',';
    out += format_double(fit.std_error);
    out += ',';
    out += std::to_string(fit.points);
    out += ',';
    out += std::to_string(n_lo);
    out += ',';
    out += std::to_string(n_hi);
    out += '\n';
    return out;
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

void write_text_file(const std::string& text, const std::string& path) {
    write_file_atomic(text, path);
}

std::string read_text_file(const std::string& path) {
    return read_file(path);
}

} // namespace primewalk
