#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "spikegraph/graph.hpp"

namespace spikegraph {

// A citation dataset: raw symmetric graph (not normalized), node features,
// and one label per node. Node ids from the files are remapped to dense
// indices in order of first appearance in the content file; `node_ids`
// keeps the original strings for that mapping. Class names are assigned
// label indices in lexicographic order.
struct Dataset {
    SparseGraph graph;
    FeatureMatrix features;
    std::vector<std::size_t> labels;        // one per node, < n_classes
    std::vector<std::string> class_names;   // sorted; index = label
    std::vector<std::string> node_ids;      // original ids, dense order
    std::size_t n_classes = 0;
    std::size_t dropped_edges = 0;          // cites lines with unknown endpoints

    std::size_t n_nodes() const { return labels.size(); }
};

// Reads the two-file citation format:
//   <stem>.content  -- per line: node_id TAB f_1 TAB ... TAB f_d TAB class
//   <stem>.cites    -- per line: cited_id TAB citing_id ('#' starts a comment)
// Citation lines whose endpoints never appear in the content file are
// dropped and counted, matching how these datasets are distributed.
Dataset load_content_cites(const std::filesystem::path& content_path,
                           const std::filesystem::path& cites_path);

enum class SplitMode {
    split_i,  // 20 nodes per class train, 500 validation, 1000 test
    split_ii, // 60/20/20 percent train/validation/test
};

struct SplitSpec {
    SplitMode mode = SplitMode::split_i;
    std::uint64_t seed = 0;
    std::vector<std::size_t> train_idx;
    std::vector<std::size_t> val_idx;
    std::vector<std::size_t> test_idx;
};

// Seeded split of the dataset's nodes. Both modes shuffle all node indices
// once with the seed and then carve the shuffled order:
//   split_i : scan for the first 20 nodes of each class (train), then take
//             the next 500 unused nodes (validation) and 1000 more (test).
//   split_ii: the last ceil(0.2 N) nodes are test; of the remaining block,
//             the last floor(0.2 |block|) are validation, the rest train.
SplitSpec make_split(const Dataset& ds, SplitMode mode, std::uint64_t seed);

enum class FeatureScaling {
    row_normalize, // divide each row by its sum; zero rows pass through
    clamp_only,    // leave values; the encoder clamps rates into [0,1]
};

// Returns a copy of the dataset with scaled features. Rejects negative
// feature values (these are word-count style matrices; a negative entry
// means a corrupt file, and it would silently distort spike rates).
Dataset scale_features(Dataset ds, FeatureScaling mode);

// Plain-text split files: TRAIN / VAL / TEST header lines, each followed by
// whitespace-separated node indices. Only the index sets round-trip; mode
// and seed are not stored.
void save_split(const SplitSpec& split, const std::filesystem::path& path);
SplitSpec load_split(const std::filesystem::path& path);

// Checks a split against a dataset: indices in range, the three sets
// disjoint, train and test nonempty. Throws InputError on violation.
void validate_split(const Dataset& ds, const SplitSpec& split);

} // namespace spikegraph
