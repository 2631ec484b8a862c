#pragma once

// Exhaustive coloring sweep. A coloring of n <= 32 vertices is a uint32 mask
// (bit v set = vertex v white). For every mask in a contiguous range the
// kernel reports which vertices miss their integration threshold and how
// many edges are balanced. Scalar code is the reference; SIMD variants must
// agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>

namespace mixspec::kernels {

struct SweepProblem {
  std::span<const std::uint32_t> adjacency;  // neighbor mask per vertex
  std::span<const std::int32_t> threshold;   // v passes iff 2 * mix(v) >= threshold[v]
};

/// fail[i]: bitmask of vertices failing for mask first+i.
/// cut[i]: balanced edges of mask first+i (edges within the problem's vertices).
using SweepFn = void (*)(const SweepProblem&, std::uint32_t first, std::size_t count,
                         std::uint32_t* fail, std::uint32_t* cut);

void sweep_scalar(const SweepProblem& p, std::uint32_t first, std::size_t count,
                  std::uint32_t* fail, std::uint32_t* cut);
#if defined(__x86_64__) || defined(__i386__)
void sweep_avx2(const SweepProblem& p, std::uint32_t first, std::size_t count,
                std::uint32_t* fail, std::uint32_t* cut);
#endif

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
/// Best ISA the CPU supports, unless MIXSPEC_ISA=scalar|avx2 narrows it.
Isa selected_isa();
SweepFn sweep_for(Isa isa);

/// Thresholds for plain integration: threshold[v] = deg(v).
std::span<const std::int32_t> degree_thresholds(std::span<const std::uint32_t> adjacency,
                                                std::int32_t* storage);

using BlockVisitor = std::function<void(std::uint32_t first, std::span<const std::uint32_t> fail,
                                        std::span<const std::uint32_t> cut)>;

/// Sweeps masks 0 .. 2^bits - 1 in blocks, in increasing order.
void sweep_all(const SweepProblem& p, unsigned bits, const BlockVisitor& visit,
               Isa isa = selected_isa());

}  // namespace mixspec::kernels
