#pragma once

#include <Eigen/Dense>

#include <vector>

#include "satsbl/errors.hpp"

namespace satsbl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Contiguous block layout of a length N*L vector: block i occupies
/// [i*L, (i+1)*L). Indices are 0-based in code; user-facing messages and file
/// formats count blocks from 1.
struct BlockLayout {
    int num_blocks = 0;  // N
    int block_len = 0;   // L

    int total_len() const { return num_blocks * block_len; }
    void validate() const;
};

/// One recovery instance: measurement rows of Y stacked into a single vector
/// so that sensor m occupies block m and error i of the solution occupies
/// block i. The design operator phi (x) I_L is never materialized.
struct BlockSparseProblem {
    Matrix phi;        // M x N fault pattern matrix
    Vector y_stacked;  // length M*L
    int num_sensors = 0;  // M
    int num_errors = 0;   // N
    int num_samples = 0;  // L

    BlockLayout layout() const { return {num_errors, num_samples}; }
    BlockLayout sensor_layout() const { return {num_sensors, num_samples}; }

    /// Build from the matrix measurement model Y = phi * X + V.
    static BlockSparseProblem from_measurements(const Matrix& phi, const Matrix& y);
    /// Build from an already stacked measurement vector.
    static BlockSparseProblem from_stacked(const Matrix& phi, const Vector& y_stacked,
                                           int num_samples);
    void validate() const;
};

/// Block indices (0-based) suspected active a priori. May be empty.
class PriorKnowledgeSet {
public:
    PriorKnowledgeSet() = default;
    /// Sorts, rejects duplicates and out-of-range entries.
    PriorKnowledgeSet(std::vector<int> indices, int num_blocks);

    bool contains(int block) const;
    bool empty() const { return indices_.empty(); }
    std::size_t size() const { return indices_.size(); }
    const std::vector<int>& indices() const { return indices_; }

private:
    std::vector<int> indices_;  // sorted ascending
};

/// Hyperparameters of the three-layer prior plus convergence controls.
struct SolverConfig {
    double a = 1e-4;             // Gamma shape shared by all precision scales
    double b_small = 1e-4;       // fixed rate for blocks without prior knowledge
    double b_init_known = 1.0;   // initial rate for blocks named in the knowledge set
    double p_shape = 1.0;        // shape of the rate hyperprior
    double q_rate = 0.1;         // rate of the rate hyperprior
    double gamma_tol = 1e-6;     // stop when the mean update moves less than this (inf norm)
    int max_iters = 2000;
    bool learn_B = true;             // false: temporal correlation pinned to identity
    bool use_prior_knowledge = true; // false: knowledge set treated as empty
    double spd_jitter = 1e-10;       // diagonal regularization before inversions

    void validate() const;
};

/// Row-major stacking: row i of the M x L matrix becomes block i of the output.
Vector stack_measurements(const Matrix& y);

/// Inverse of stack_measurements.
Matrix unstack_measurements(const Vector& y_stacked, int num_rows, int num_samples);

/// Applies (phi (x) I_L) to x without materializing the Kronecker product:
/// output block m = sum_i phi(m, i) * x_i.
Vector apply_design(const Matrix& phi, const Vector& x, const BlockLayout& layout);

/// Adjoint of apply_design: output block i = sum_m phi(m, i) * r_m.
Vector apply_design_transpose(const Matrix& phi, const Vector& r, const BlockLayout& layout);

/// Copy of block `block` (0-based) of v.
Vector extract_block(const Vector& v, int block, const BlockLayout& layout);

/// Per-block arithmetic means; element i is the mean of block i.
Vector row_means(const Vector& mu_x, const BlockLayout& layout);

}  // namespace satsbl
