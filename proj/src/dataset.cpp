#include "spikegraph/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "spikegraph/error.hpp"
#include "spikegraph/rng.hpp"

namespace spikegraph {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

double parse_feature(const std::string& field, const std::string& path,
                     std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(path, line_no, "feature value '" + field + "' is not a number");
    return value;
}

// Reads lines, trimming a trailing '\r' so CRLF files parse the same way.
bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line))
        return false;
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return true;
}

} // namespace

Dataset load_content_cites(const std::filesystem::path& content_path,
                           const std::filesystem::path& cites_path) {
    std::ifstream content(content_path);
    if (!content)
        throw Error("cannot open content file: " + content_path.string());

    Dataset ds;
    std::map<std::string, std::size_t> id_to_index;
    std::vector<std::string> raw_labels;
    std::size_t dim = 0;
    std::string line;
    std::size_t line_no = 0;

    while (next_line(content, line)) {
        ++line_no;
        if (line.empty())
            continue;
        auto fields = split_tabs(line);
        if (fields.size() < 3)
            throw ParseError(content_path.string(), line_no,
                             "expected node_id, features, label");
        if (dim == 0)
            dim = fields.size() - 2;
        else if (fields.size() - 2 != dim)
            throw ParseError(content_path.string(), line_no,
                             "expected " + std::to_string(dim) + " features, got " +
                                 std::to_string(fields.size() - 2));

        const std::string& id = fields.front();
        if (!id_to_index.emplace(id, ds.node_ids.size()).second)
            throw ParseError(content_path.string(), line_no,
                             "duplicate node id '" + id + "'");
        ds.node_ids.push_back(id);
        raw_labels.push_back(fields.back());
        for (std::size_t j = 1; j + 1 < fields.size(); ++j)
            ds.features.data.push_back(
                parse_feature(fields[j], content_path.string(), line_no));
    }
    if (ds.node_ids.empty())
        throw Error("content file is empty: " + content_path.string());
    ds.features.n_rows = ds.node_ids.size();
    ds.features.n_cols = dim;

    // Class names get stable indices by sorting, independent of file order.
    std::set<std::string> names(raw_labels.begin(), raw_labels.end());
    ds.class_names.assign(names.begin(), names.end());
    ds.n_classes = ds.class_names.size();
    ds.labels.reserve(raw_labels.size());
    for (const auto& name : raw_labels) {
        auto it = std::lower_bound(ds.class_names.begin(), ds.class_names.end(), name);
        ds.labels.push_back(static_cast<std::size_t>(it - ds.class_names.begin()));
    }

    std::ifstream cites(cites_path);
    if (!cites)
        throw Error("cannot open cites file: " + cites_path.string());
    std::vector<Edge> edges;
    line_no = 0;
    while (next_line(cites, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra))
            throw ParseError(cites_path.string(), line_no,
                             "expected exactly two node ids");
        auto ia = id_to_index.find(a);
        auto ib = id_to_index.find(b);
        if (ia == id_to_index.end() || ib == id_to_index.end()) {
            ++ds.dropped_edges;
            continue;
        }
        edges.push_back({ia->second, ib->second});
    }
    ds.graph = build_graph(edges, ds.n_nodes());
    return ds;
}

SplitSpec make_split(const Dataset& ds, SplitMode mode, std::uint64_t seed) {
    const std::size_t n = ds.n_nodes();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    RngStream rng(seed, stream_tag::split, static_cast<std::uint64_t>(mode));
    rng.shuffle(order);

    SplitSpec split;
    split.mode = mode;
    split.seed = seed;

    if (mode == SplitMode::split_i) {
        constexpr std::size_t per_class = 20;
        constexpr std::size_t n_val = 500;
        constexpr std::size_t n_test = 1000;

        std::vector<std::size_t> class_counts(ds.n_classes, 0);
        for (std::size_t c : ds.labels)
            ++class_counts[c];
        for (std::size_t c = 0; c < ds.n_classes; ++c)
            if (class_counts[c] < per_class)
                throw InputError("class '" + ds.class_names[c] + "' has only " +
                                 std::to_string(class_counts[c]) +
                                 " nodes, need " + std::to_string(per_class));
        if (n < per_class * ds.n_classes + n_val + n_test)
            throw InputError("dataset too small for the fixed-count split: " +
                             std::to_string(n) + " nodes");

        std::vector<std::size_t> taken(ds.n_classes, 0);
        std::vector<char> in_train(n, 0);
        for (std::size_t idx : order) {
            std::size_t c = ds.labels[idx];
            if (taken[c] < per_class) {
                ++taken[c];
                in_train[idx] = 1;
                split.train_idx.push_back(idx);
            }
        }
        for (std::size_t idx : order) {
            if (in_train[idx])
                continue;
            if (split.val_idx.size() < n_val)
                split.val_idx.push_back(idx);
            else if (split.test_idx.size() < n_test)
                split.test_idx.push_back(idx);
            else
                break;
        }
    } else {
        const std::size_t n_test =
            static_cast<std::size_t>(std::ceil(0.2 * static_cast<double>(n)));
        const std::size_t block = n - n_test;
        const std::size_t n_val =
            static_cast<std::size_t>(std::floor(0.2 * static_cast<double>(block)));
        const std::size_t n_train = block - n_val;
        if (n_train == 0 || n_test == 0)
            throw InputError("dataset too small for a ratio split: " +
                             std::to_string(n) + " nodes");
        split.train_idx.assign(order.begin(), order.begin() + n_train);
        split.val_idx.assign(order.begin() + n_train, order.begin() + block);
        split.test_idx.assign(order.begin() + block, order.end());
    }
    return split;
}

Dataset scale_features(Dataset ds, FeatureScaling mode) {
    FeatureMatrix& x = ds.features;
    for (std::size_t i = 0; i < x.n_rows; ++i)
        for (std::size_t j = 0; j < x.n_cols; ++j)
            if (!(x.at(i, j) >= 0.0))
                throw InputError("feature matrix has a negative or NaN entry at node " +
                                 std::to_string(i) + ", column " + std::to_string(j));
    if (mode == FeatureScaling::row_normalize) {
        for (std::size_t i = 0; i < x.n_rows; ++i) {
            auto row = x.row(i);
            double sum = 0.0;
            for (double v : row)
                sum += v;
            if (sum > 0.0)
                for (double& v : row)
                    v /= sum;
        }
    }
    return ds;
}

void save_split(const SplitSpec& split, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot open split file for writing: " + path.string());
    auto section = [&out](const char* name, const std::vector<std::size_t>& idx) {
        out << name << '\n';
        for (std::size_t i = 0; i < idx.size(); ++i)
            out << idx[i] << (i + 1 == idx.size() ? "" : " ");
        out << '\n';
    };
    section("TRAIN", split.train_idx);
    section("VAL", split.val_idx);
    section("TEST", split.test_idx);
    if (!out)
        throw Error("failed writing split file: " + path.string());
}

SplitSpec load_split(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open split file: " + path.string());
    SplitSpec split;
    std::vector<std::size_t>* current = nullptr;
    bool seen_train = false, seen_val = false, seen_test = false;
    std::string token;
    while (in >> token) {
        if (token == "TRAIN") {
            current = &split.train_idx;
            seen_train = true;
        } else if (token == "VAL") {
            current = &split.val_idx;
            seen_val = true;
        } else if (token == "TEST") {
            current = &split.test_idx;
            seen_test = true;
        } else {
            std::size_t value = 0;
            auto [ptr, ec] =
                std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size() || !current)
                throw Error("split file " + path.string() +
                            ": unexpected token '" + token + "'");
            current->push_back(value);
        }
    }
    if (!seen_train || !seen_val || !seen_test)
        throw Error("split file " + path.string() +
                    " is missing a TRAIN/VAL/TEST section");
    return split;
}

void validate_split(const Dataset& ds, const SplitSpec& split) {
    const std::size_t n = ds.n_nodes();
    std::vector<char> seen(n, 0);
    auto check = [&](const std::vector<std::size_t>& idx, const char* name) {
        for (std::size_t i : idx) {
            if (i >= n)
                throw InputError(std::string(name) + " index " + std::to_string(i) +
                                 " out of range for " + std::to_string(n) + " nodes");
            if (seen[i])
                throw InputError("node " + std::to_string(i) +
                                 " appears in more than one split section");
            seen[i] = 1;
        }
    };
    check(split.train_idx, "train");
    check(split.val_idx, "val");
    check(split.test_idx, "test");
    if (split.train_idx.empty() || split.test_idx.empty())
        throw InputError("split needs nonempty train and test sets");
}

} // namespace spikegraph
