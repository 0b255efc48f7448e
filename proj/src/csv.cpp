#include "hausdim/csv.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "hausdim/errors.hpp"
#include "hausdim/format.hpp"

namespace hausdim {

namespace {

constexpr const char* kBoxHeader = "delta,count";
constexpr const char* kFitHeader = "slope,stderr";
constexpr const char* kCoverHeader = "depth,s,sum";
constexpr const char* kCertHeader = "s,c,samples,delta_min,delta_max,rng_seed,hs_lower_bound";

class RowReader {
public:
    explicit RowReader(std::istream& in) : in_(in) {}

    std::optional<std::vector<std::string>> next() {
        std::string raw;
        if (!std::getline(in_, raw)) return std::nullopt;
        ++line_;
        return split(raw, ',');
    }

    void expect_header(const char* header) {
        std::string raw;
        ++line_;
        if (!std::getline(in_, raw) || raw != header) {
            throw ParseError(line_, std::string("expected header '") + header + "'");
        }
    }

    double real(const std::string& cell) const {
        try {
            return parse_real(cell);
        } catch (const InvalidArgument&) {
            throw ParseError(line_, "not a number: '" + cell + "'");
        }
    }

    unsigned long long integer(const std::string& cell) const {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(cell, &used);
            if (used != cell.size()) throw std::invalid_argument(cell);
            return v;
        } catch (const std::exception&) {
            throw ParseError(line_, "not an integer: '" + cell + "'");
        }
    }

    void expect_columns(const std::vector<std::string>& row, std::size_t n) const {
        if (row.size() != n) {
            throw ParseError(line_, "expected " + std::to_string(n) + " columns, got " +
                                        std::to_string(row.size()));
        }
    }

    std::size_t line() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

}  // namespace

void write_box_count_csv(std::ostream& out, const BoxCountSeries& series,
                         const std::optional<DimensionEstimate>& fit) {
    out << kBoxHeader << '\n';
    for (const auto& e : series.entries) out << format_csv_real(e.delta) << ',' << e.count << '\n';
    if (fit) {
        out << kFitHeader << '\n';
        out << format_csv_real(fit->value) << ',' << format_csv_real(fit->uncertainty) << '\n';
    }
}

void write_cover_sum_csv(std::ostream& out, const std::vector<CoverSum>& rows) {
    out << kCoverHeader << '\n';
    for (const auto& r : rows) {
        out << static_cast<long long>(r.depth_or_delta) << ',' << format_csv_real(r.s) << ','
            << format_csv_real(r.value) << '\n';
    }
}

void write_certificate_csv(std::ostream& out, const MddCertificate& cert) {
    out << kCertHeader << '\n';
    out << format_csv_real(cert.s) << ',' << format_csv_real(cert.c) << ',' << cert.samples << ','
        << format_csv_real(cert.delta_min) << ',' << format_csv_real(cert.delta_max) << ','
        << cert.rng_seed << ',' << format_csv_real(cert.implied_measure_lower_bound) << '\n';
}

BoxCountTable read_box_count_csv(std::istream& in) {
    RowReader reader(in);
    reader.expect_header(kBoxHeader);
    BoxCountTable table;
    while (auto row = reader.next()) {
        if (row->size() == 2 && (*row)[0] == "slope" && (*row)[1] == "stderr") {
            auto fit = reader.next();
            if (!fit) throw ParseError(reader.line(), "missing regression row");
            reader.expect_columns(*fit, 2);
            table.slope = reader.real((*fit)[0]);
            table.stderr_slope = reader.real((*fit)[1]);
            break;
        }
        reader.expect_columns(*row, 2);
        table.series.entries.push_back(
            {reader.real((*row)[0]), static_cast<std::size_t>(reader.integer((*row)[1]))});
    }
    return table;
}

std::vector<CoverSum> read_cover_sum_csv(std::istream& in) {
    RowReader reader(in);
    reader.expect_header(kCoverHeader);
    std::vector<CoverSum> rows;
    while (auto row = reader.next()) {
        reader.expect_columns(*row, 3);
        rows.push_back(CoverSum{reader.real((*row)[1]), reader.real((*row)[2]),
                                static_cast<double>(reader.integer((*row)[0]))});
    }
    return rows;
}

MddCertificate read_certificate_csv(std::istream& in) {
    RowReader reader(in);
    reader.expect_header(kCertHeader);
    auto row = reader.next();
    if (!row) throw ParseError(reader.line(), "missing certificate row");
    reader.expect_columns(*row, 7);
    MddCertificate cert;
    cert.s = reader.real((*row)[0]);
    cert.c = reader.real((*row)[1]);
    cert.samples = static_cast<std::size_t>(reader.integer((*row)[2]));
    cert.delta_min = reader.real((*row)[3]);
    cert.delta_max = reader.real((*row)[4]);
    cert.rng_seed = reader.integer((*row)[5]);
    cert.implied_measure_lower_bound = reader.real((*row)[6]);
    return cert;
}

}  // namespace hausdim
