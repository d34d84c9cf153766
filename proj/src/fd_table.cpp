#include "tpnlie/fd_table.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tpnlie/errors.hpp"

namespace tpnlie {

namespace {

// Parity of the permutation sorting idx ascending; nullopt if entries repeat.
std::optional<int> sort_sign(std::vector<std::size_t>& idx) {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
        std::size_t min_at = i;
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (idx[j] < idx[min_at]) min_at = j;
        if (min_at != i) {
            std::swap(idx[i], idx[min_at]);
            sign = -sign;
        }
    }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return std::nullopt;
    return sign;
}

} // namespace

FdTable::FdTable(std::size_t dimension, std::size_t arity, bool with_product)
    : dim_(dimension), arity_(arity) {
    if (dim_ == 0) throw StructuralError("algebra dimension must be positive");
    if (arity_ < 2) throw StructuralError("bracket arity must be at least 2");
    std::size_t total = 1;
    for (std::size_t i = 0; i < arity_; ++i) total *= dim_;
    bracket_.assign(total, Vec(dim_, Rational(0)));
    if (with_product) product_.emplace(dim_ * dim_, Vec(dim_, Rational(0)));
}

std::size_t FdTable::flat_index(const std::vector<std::size_t>& idx) const {
    if (idx.size() != arity_) throw StructuralError("bracket index tuple has wrong length");
    std::size_t flat = 0;
    for (std::size_t v : idx) {
        if (v >= dim_) throw StructuralError("basis index out of range");
        flat = flat * dim_ + v;
    }
    return flat;
}

const Vec& FdTable::bracket_entry(const std::vector<std::size_t>& idx) const {
    return bracket_[flat_index(idx)];
}

void FdTable::set_bracket_entry(const std::vector<std::size_t>& idx, Vec value) {
    if (value.size() != dim_) throw StructuralError("bracket value has wrong dimension");
    bracket_[flat_index(idx)] = std::move(value);
}

const Vec& FdTable::product_entry(std::size_t i, std::size_t j) const {
    if (!product_) throw StructuralError("algebra has no product table");
    if (i >= dim_ || j >= dim_) throw StructuralError("basis index out of range");
    return (*product_)[i * dim_ + j];
}

void FdTable::set_product_entry(std::size_t i, std::size_t j, Vec value) {
    if (!product_) throw StructuralError("algebra has no product table");
    if (i >= dim_ || j >= dim_) throw StructuralError("basis index out of range");
    if (value.size() != dim_) throw StructuralError("product value has wrong dimension");
    (*product_)[i * dim_ + j] = value;
    (*product_)[j * dim_ + i] = std::move(value);
}

void FdTable::set_bracket_skew(const std::vector<std::size_t>& idx, const Vec& value) {
    if (value.size() != dim_) throw StructuralError("bracket value has wrong dimension");
    std::vector<std::size_t> perm = idx;
    std::sort(perm.begin(), perm.end());
    std::vector<std::size_t> base = idx;
    auto base_sign = sort_sign(base);
    if (!base_sign) {
        bool zero = std::all_of(value.begin(), value.end(), [](const Rational& q) { return q == 0; });
        if (!zero)
            throw StructuralError("repeated basis indices force a zero bracket value");
        return;
    }
    Vec canonical(value);
    if (*base_sign < 0)
        for (auto& q : canonical) q = -q;
    do {
        std::vector<std::size_t> t = perm;
        int sign = *sort_sign(t);
        Vec v = canonical;
        if (sign < 0)
            for (auto& q : v) q = -q;
        set_bracket_entry(perm, std::move(v));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

Vec FdTable::bracket(const std::vector<Vec>& args) const {
    if (args.size() != arity_) throw ArityError("bracket arity mismatch");
    for (const auto& a : args)
        if (a.size() != dim_) throw StructuralError("coordinate vector has wrong dimension");
    Vec out(dim_, Rational(0));
    std::vector<std::size_t> idx(arity_, 0);
    for (;;) {
        Rational coeff(1);
        for (std::size_t k = 0; k < arity_ && coeff != 0; ++k) coeff *= args[k][idx[k]];
        if (coeff != 0) {
            const Vec& v = bracket_entry(idx);
            for (std::size_t d = 0; d < dim_; ++d)
                if (v[d] != 0) out[d] += coeff * v[d];
        }
        std::size_t k = arity_;
        while (k > 0) {
            --k;
            if (++idx[k] < dim_) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

Vec FdTable::product(const Vec& a, const Vec& b) const {
    if (!product_) throw StructuralError("algebra has no product table");
    if (a.size() != dim_ || b.size() != dim_)
        throw StructuralError("coordinate vector has wrong dimension");
    Vec out(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            const Vec& v = (*product_)[i * dim_ + j];
            Rational c = a[i] * b[j];
            for (std::size_t d = 0; d < dim_; ++d)
                if (v[d] != 0) out[d] += c * v[d];
        }
    }
    return out;
}

FdTable FdTable::vector_product(std::size_t arity, bool with_zero_product) {
    const std::size_t dim = arity + 1;
    FdTable t(dim, arity, with_zero_product);
    std::vector<std::size_t> asc(arity);
    for (std::size_t omitted = 0; omitted < dim; ++omitted) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < dim; ++i)
            if (i != omitted) asc[k++] = i;
        Vec v(dim, Rational(0));
        v[omitted] = (omitted % 2 == 0) ? Rational(1) : Rational(-1);
        t.set_bracket_skew(asc, v);
    }
    return t;
}

FdTable FdTable::direct_sum(const FdTable& a, const FdTable& b) {
    if (a.arity() != b.arity()) throw StructuralError("direct sum requires equal arity");
    const bool with_product = a.has_product() && b.has_product();
    FdTable out(a.dim_ + b.dim_, a.arity_, with_product);
    auto embed = [&](const Vec& v, std::size_t offset) {
        Vec w(out.dim_, Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
        return w;
    };
    auto copy_block = [&](const FdTable& src, std::size_t offset) {
        std::vector<std::size_t> idx(src.arity_, 0);
        for (;;) {
            const Vec& v = src.bracket_entry(idx);
            bool nonzero = std::any_of(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
            if (nonzero) {
                std::vector<std::size_t> shifted = idx;
                for (auto& s : shifted) s += offset;
                out.set_bracket_entry(shifted, embed(v, offset));
            }
            std::size_t k = src.arity_;
            while (k > 0) {
                --k;
                if (++idx[k] < src.dim_) break;
                idx[k] = 0;
                if (k == 0) return;
            }
        }
    };
    copy_block(a, 0);
    copy_block(b, a.dim_);
    if (with_product) {
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t j = 0; j < a.dim_; ++j)
                out.set_product_entry(i, j, embed(a.product_entry(i, j), 0));
        for (std::size_t i = 0; i < b.dim_; ++i)
            for (std::size_t j = 0; j < b.dim_; ++j)
                out.set_product_entry(a.dim_ + i, a.dim_ + j, embed(b.product_entry(i, j), a.dim_));
    }
    return out;
}

namespace {

using nlohmann::json;

Vec parse_value(const json& value, std::size_t dim) {
    Vec v(dim, Rational(0));
    if (!value.is_object()) throw ParseError("entry 'value' must be an object of index -> rational");
    for (auto it = value.begin(); it != value.end(); ++it) {
        std::size_t k = 0;
        try {
            k = static_cast<std::size_t>(std::stoul(it.key()));
        } catch (const std::exception&) {
            throw ParseError("value key '" + it.key() + "' is not a basis index");
        }
        if (k >= dim) throw ParseError("value index " + it.key() + " out of range");
        if (!it.value().is_string()) throw ParseError("value coefficients must be rational strings");
        v[k] = parse_rational(it.value().get<std::string>());
    }
    return v;
}

std::vector<std::size_t> parse_args(const json& args, std::size_t expected, std::size_t dim) {
    if (!args.is_array() || args.size() != expected)
        throw ParseError("entry 'args' must list exactly " + std::to_string(expected) + " indices");
    std::vector<std::size_t> idx;
    idx.reserve(expected);
    for (const auto& a : args) {
        if (!a.is_number_unsigned()) throw ParseError("basis indices must be non-negative integers");
        std::size_t v = a.get<std::size_t>();
        if (v >= dim) throw ParseError("basis index " + std::to_string(v) + " out of range");
        idx.push_back(v);
    }
    return idx;
}

} // namespace

FdTable load_fd_table(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        // nlohmann reports a byte offset; convert it to line/column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < json_text.size(); ++i) {
            if (json_text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
    }

    if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("arity"))
        throw ParseError("document must be an object with 'dimension' and 'arity'");
    if (!doc["dimension"].is_number_unsigned() || !doc["arity"].is_number_unsigned())
        throw ParseError("'dimension' and 'arity' must be non-negative integers");
    const auto dim = doc["dimension"].get<std::size_t>();
    const auto arity = doc["arity"].get<std::size_t>();
    if (dim == 0) throw ParseError("'dimension' must be positive");
    if (arity < 2) throw ParseError("'arity' must be at least 2");

    FdTable table(dim, arity, doc.contains("product"));

    // Explicit entries are literal; the skew/symmetric orbit fills in around
    // them afterwards, so a fixture may deliberately break a symmetry.
    std::vector<std::pair<std::vector<std::size_t>, Vec>> explicit_brackets;
    if (doc.contains("bracket")) {
        if (!doc["bracket"].is_array()) throw ParseError("'bracket' must be an array of entries");
        for (const auto& entry : doc["bracket"]) {
            if (!entry.is_object() || !entry.contains("args") || !entry.contains("value"))
                throw ParseError("bracket entries need 'args' and 'value'");
            auto idx = parse_args(entry["args"], arity, dim);
            auto val = parse_value(entry["value"], dim);
            for (const auto& [seen, v] : explicit_brackets)
                if (seen == idx && v != val)
                    throw ParseError("inconsistent duplicate bracket entry");
            explicit_brackets.emplace_back(std::move(idx), std::move(val));
        }
    }
    std::vector<std::vector<std::size_t>> given;
    for (const auto& [idx, val] : explicit_brackets) {
        table.set_bracket_entry(idx, val);
        given.push_back(idx);
    }
    auto is_given = [&](const std::vector<std::size_t>& idx) {
        return std::find(given.begin(), given.end(), idx) != given.end();
    };
    for (const auto& [idx, val] : explicit_brackets) {
        std::vector<std::size_t> base = idx;
        auto base_sign = sort_sign(base);
        if (!base_sign) continue; // repeated indices have a one-element orbit
        Vec canonical = val;
        if (*base_sign < 0)
            for (auto& q : canonical) q = -q;
        std::vector<std::size_t> perm = base;
        do {
            if (perm == idx || is_given(perm)) continue;
            std::vector<std::size_t> t = perm;
            int sign = *sort_sign(t);
            Vec v = canonical;
            if (sign < 0)
                for (auto& q : v) q = -q;
            table.set_bracket_entry(perm, std::move(v));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    if (doc.contains("product")) {
        if (!doc["product"].is_array()) throw ParseError("'product' must be an array of entries");
        std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vec>> seen;
        for (const auto& entry : doc["product"]) {
            if (!entry.is_object() || !entry.contains("args") || !entry.contains("value"))
                throw ParseError("product entries need 'args' and 'value'");
            auto idx = parse_args(entry["args"], 2, dim);
            auto val = parse_value(entry["value"], dim);
            std::pair<std::size_t, std::size_t> key{idx[0], idx[1]};
            for (const auto& [k, v] : seen)
                if ((k == key || (k.first == key.second && k.second == key.first)) && v != val)
                    throw ParseError("inconsistent duplicate product entry");
            seen.emplace_back(key, val);
            table.set_product_entry(idx[0], idx[1], std::move(val));
        }
    }
    return table;
}

FdTable load_fd_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_fd_table(buf.str());
}

Vec structure_constant_bracket(const FdTable& table, const std::vector<Vec>& args) {
    return table.bracket(args);
}

} // namespace tpnlie
