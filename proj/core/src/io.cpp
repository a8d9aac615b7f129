#include "dyadica/io.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <limits>
#include <sstream>
#include <vector>

namespace dyadica {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using nlohmann::json;

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

Integer parse_integer(const std::string& s, std::size_t line, std::size_t column) {
    try {
        if (s.empty()) throw std::invalid_argument("empty");
        return Integer(s);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'", line, column);
    }
}

Rational parse_ratio(const std::string& num, const std::string& den, std::size_t line,
                     std::size_t column) {
    Integer n = parse_integer(num, line, column);
    Integer d = parse_integer(den, line, column + 1);
    if (d == 0) throw ParseError("zero denominator", line, column + 1);
    return Rational(n, d);
}

void append_scalar_csv(std::string& out, const ExactScalar& v) {
    out += numerator(v.re).str();
    out += ',';
    out += denominator(v.re).str();
    out += ',';
    out += numerator(v.im).str();
    out += ',';
    out += denominator(v.im).str();
}

// Position of a byte offset in the source text, 1-based.
std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json rational_to_json_entry(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Integer integer_from_json(const json& j, const std::string& text) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    auto [line, col] = locate(text, 0);
    throw ParseError("coefficient entries must be integers", line, col);
}

json scalar_to_json(const ExactScalar& v) {
    return json::array({rational_to_json_entry(numerator(v.re)),
                        rational_to_json_entry(denominator(v.re)),
                        rational_to_json_entry(numerator(v.im)),
                        rational_to_json_entry(denominator(v.im))});
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what + " (line " + std::to_string(line) +
                         (column ? ", column " + std::to_string(column) : "") + ")"),
      line_(line),
      column_(column) {}

std::string emit_step_csv(const StepFunction& f, bool with_float) {
    std::string out = "rank,support_exp\n";
    out += std::to_string(f.rank());
    out += ',';
    out += std::to_string(f.support_exp());
    out += '\n';
    out += "index,re_num,re_den,im_num,im_den";
    if (with_float) out += ",re_approx,im_approx";
    out += '\n';
    for (std::size_t k = 0; k < f.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        append_scalar_csv(out, f.values()[k]);
        if (with_float) {
            std::ostringstream ss;
            ss << static_cast<double>(f.values()[k].re) << ','
               << static_cast<double>(f.values()[k].im);
            out += ',';
            out += ss.str();
        }
        out += '\n';
    }
    return out;
}

StepFunction parse_step_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::string stripped = line;
            if (!stripped.empty() && stripped.back() == '\r') stripped.pop_back();
            if (stripped.empty() || stripped[0] == '#') continue;
            line = stripped;
            return true;
        }
        if (required) throw ParseError("unexpected end of file", lineno + 1);
        return false;
    };

    next_line(true);
    if (line != "rank,support_exp")
        throw ParseError("expected header 'rank,support_exp'", lineno, 1);
    next_line(true);
    auto dims = split_csv(line);
    if (dims.size() != 2) throw ParseError("expected 'rank,support_exp' values", lineno, 1);
    long rank, support_exp;
    try {
        rank = std::stol(dims[0]);
        support_exp = std::stol(dims[1]);
    } catch (const std::exception&) {
        throw ParseError("bad rank/support_exp values", lineno, 1);
    }
    if (rank + support_exp < 0 || rank + support_exp > 26)
        throw ParseError("rank + support_exp out of range", lineno, 1);
    std::size_t size = std::size_t{1} << (rank + support_exp);

    next_line(true);
    if (split_csv(line).size() < 5 || split_csv(line)[0] != "index")
        throw ParseError("expected header 'index,re_num,re_den,im_num,im_den'", lineno, 1);

    std::vector<ExactScalar> values(size);
    std::vector<bool> seen(size, false);
    for (std::size_t row = 0; row < size; ++row) {
        next_line(true);
        auto fields = split_csv(line);
        if (fields.size() < 5) throw ParseError("expected 5 columns", lineno, fields.size());
        Integer idx = parse_integer(fields[0], lineno, 1);
        if (idx < 0 || idx >= Integer(size))
            throw ParseError("index out of range", lineno, 1);
        std::size_t k = static_cast<std::size_t>(idx);
        if (seen[k]) throw ParseError("duplicate index", lineno, 1);
        seen[k] = true;
        values[k] = ExactScalar(parse_ratio(fields[1], fields[2], lineno, 2),
                                parse_ratio(fields[3], fields[4], lineno, 4));
    }
    if (next_line(false)) throw ParseError("unexpected trailing row", lineno, 1);
    return StepFunction(static_cast<int>(rank), static_cast<int>(support_exp),
                        std::move(values));
}

StepFunction parse_step_csv_string(const std::string& text) {
    std::istringstream in(text);
    return parse_step_csv(in);
}

std::string emit_mask_json(const std::vector<ExactScalar>& coeffs) {
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(scalar_to_json(c));
    json doc;
    doc["coefficients"] = arr;
    return doc.dump(2) + "\n";
}

std::vector<ExactScalar> parse_mask_coeffs_json(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_mask_coeffs_json_string(text);
}

std::vector<ExactScalar> parse_mask_coeffs_json_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = locate(text, e.byte ? e.byte - 1 : 0);
        throw ParseError(std::string("JSON: ") + e.what(), line, col);
    }
    if (!doc.is_object() || !doc.contains("coefficients") || !doc["coefficients"].is_array())
        throw ParseError("expected an object with a 'coefficients' array", 1, 1);
    std::vector<ExactScalar> coeffs;
    for (const auto& entry : doc["coefficients"]) {
        if (!entry.is_array() || entry.size() != 4)
            throw ParseError("each coefficient must be [re_num, re_den, im_num, im_den]", 1, 1);
        Integer re_n = integer_from_json(entry[0], text);
        Integer re_d = integer_from_json(entry[1], text);
        Integer im_n = integer_from_json(entry[2], text);
        Integer im_d = integer_from_json(entry[3], text);
        if (re_d == 0 || im_d == 0) throw ParseError("zero denominator", 1, 1);
        coeffs.emplace_back(Rational(re_n, re_d), Rational(im_n, im_d));
    }
    if (coeffs.empty()) throw ParseError("coefficient list is empty", 1, 1);
    return coeffs;
}

std::string emit_theorem1_json(const Theorem1Report& report) {
    json blocks = json::array();
    for (const auto& [n, v] : report.fhat_values) {
        const ExactScalar& printed = report.printed_values.at(n);
        json row;
        row["n"] = n;
        row["computed"] = scalar_to_json(v);
        row["printed"] = scalar_to_json(printed);
        row["deviates"] = !(v == printed);
        blocks.push_back(row);
    }
    json sums = json::array();
    for (const auto& [N, v] : report.partial_sums) {
        json row;
        row["N"] = N;
        row["value"] = scalar_to_json(v);
        sums.push_back(row);
    }
    json doc;
    doc["n_min"] = report.n_min;
    doc["n_max"] = report.n_max;
    doc["fhat_blocks"] = blocks;
    doc["partial_sums"] = sums;
    doc["printed_value_deviates"] = report.printed_value_deviates();
    return doc.dump(2) + "\n";
}

std::string emit_theorem1_csv(const Theorem1Report& report) {
    std::string out = "n,computed_num,computed_den,paper_value_num,paper_value_den\n";
    for (const auto& [n, v] : report.fhat_values) {
        const ExactScalar& printed = report.printed_values.at(n);
        out += std::to_string(n);
        out += ',';
        out += numerator(v.re).str();
        out += ',';
        out += denominator(v.re).str();
        out += ',';
        out += numerator(printed.re).str();
        out += ',';
        out += denominator(printed.re).str();
        out += '\n';
    }
    return out;
}

}  // namespace dyadica
