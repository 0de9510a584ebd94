#include "dnet/text_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

namespace dnet {

namespace {

// Next non-blank line, with any trailing CR stripped.  False at EOF.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            return true;
    }
    return false;
}

int parse_int(const std::string& text, const char* what) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(std::string(what) + ": expected a number, got \"" + text + "\"");
    return value;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(std::string(what) + ": expected a number, got \"" +
                         std::string(text) + "\"");
    return value;
}

// Exact decimal expansion of num / 2^prec in [0, 1); never a trailing
// zero, because the loop stops exactly when the remainder vanishes.
std::string dyadic_decimal(std::uint64_t num, int prec) {
    if (num == 0)
        return "0";
    const std::uint64_t mask = (std::uint64_t{1} << prec) - 1;
    std::string out = "0.";
    std::uint64_t frac = num;
    while (frac) {
        frac *= 10;
        out += static_cast<char>('0' + (frac >> prec));
        frac &= mask;
    }
    return out;
}

} // namespace

std::optional<F2Matrix> try_read_matrix(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line))
        return std::nullopt;
    const int dim = parse_int(line, "matrix header");
    if (dim < 1 || dim > F2Matrix::kMaxDim)
        throw ParseError("matrix dimension out of range 1..64: " + line);
    F2Matrix a(dim);
    for (int i = 1; i <= dim; ++i) {
        if (!next_content_line(in, line))
            throw ParseError("unexpected end of input inside a matrix");
        if (static_cast<int>(line.size()) != dim)
            throw ParseError("matrix row " + std::to_string(i) + " has length " +
                             std::to_string(line.size()) + ", expected " +
                             std::to_string(dim));
        std::uint64_t bits = 0;
        for (int j = 1; j <= dim; ++j) {
            const char ch = line[j - 1];
            if (ch == '1')
                bits |= std::uint64_t{1} << (j - 1);
            else if (ch != '0')
                throw ParseError(std::string("matrix entries must be 0 or 1, got '") +
                                 ch + "'");
        }
        a.set_row(i, bits);
    }
    return a;
}

F2Matrix read_matrix(std::istream& in) {
    auto a = try_read_matrix(in);
    if (!a)
        throw ParseError("expected a matrix, found end of input");
    return *std::move(a);
}

void write_matrix(std::ostream& out, const F2Matrix& a) {
    out << a.dim() << '\n';
    for (int i = 1; i <= a.dim(); ++i) {
        for (int j = 1; j <= a.dim(); ++j)
            out << static_cast<char>('0' + a.at(i, j));
        out << '\n';
    }
}

std::string matrix_to_text(const F2Matrix& a) {
    std::ostringstream out;
    write_matrix(out, a);
    return out.str();
}

void write_points(std::ostream& out, const NetPoints& pts, PointFormat fmt) {
    const std::uint64_t denominator = std::uint64_t{1} << pts.m;
    for (std::uint64_t n = 0; n < pts.count(); ++n) {
        for (int j = 0; j < pts.s; ++j) {
            if (j)
                out << ' ';
            const std::uint64_t num = pts.axes[j][n];
            switch (fmt) {
            case PointFormat::Frac:
                out << num << '/' << denominator;
                break;
            case PointFormat::Dec:
                out << dyadic_decimal(num, pts.m);
                break;
            case PointFormat::Bin:
                for (int bit = pts.m - 1; bit >= 0; --bit)
                    out << static_cast<char>('0' + ((num >> bit) & 1));
                break;
            }
        }
        out << '\n';
    }
}

NetPoints read_points(std::istream& in) {
    std::vector<std::vector<std::pair<std::uint64_t, int>>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream fields(line);
        std::vector<std::pair<std::uint64_t, int>> row;
        std::string token;
        while (fields >> token) {
            const auto slash = token.find('/');
            if (slash == std::string::npos)
                throw ParseError("point coordinate must look like k/2^m, got \"" +
                                 token + "\"");
            const std::uint64_t num =
                parse_u64(std::string_view(token).substr(0, slash), "numerator");
            const std::uint64_t den =
                parse_u64(std::string_view(token).substr(slash + 1), "denominator");
            if (den == 0 || (den & (den - 1)) != 0)
                throw ParseError("denominator must be a power of two, got \"" +
                                 token + "\"");
            const int prec = std::countr_zero(den);
            if (prec > 32)
                throw ParseError("precision above 32 bits: \"" + token + "\"");
            if (num >= den)
                throw ParseError("coordinate not in [0,1): \"" + token + "\"");
            row.emplace_back(num, prec);
        }
        if (row.empty())
            continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("inconsistent coordinate count across points");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError("no points in input");

    int m = 0;
    for (const auto& row : rows)
        for (const auto& [num, prec] : row)
            m = std::max(m, prec);
    NetPoints pts;
    pts.m = m;
    pts.s = static_cast<int>(rows.front().size());
    pts.axes.assign(pts.s, {});
    for (auto& axis : pts.axes)
        axis.reserve(rows.size());
    for (const auto& row : rows)
        for (int j = 0; j < pts.s; ++j)
            pts.axes[j].push_back(
                static_cast<std::uint32_t>(row[j].first << (m - row[j].second)));
    return pts;
}

} // namespace dnet
