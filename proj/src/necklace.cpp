#include "mixspec/errors.hpp"
#include "mixspec/families.hpp"

#include <set>
#include <string>

namespace mixspec {

namespace {

class Tiler {
 public:
  explicit Tiler(std::size_t n) : n_(n) {}

  std::set<Coloring> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(std::size_t filled) {
    if (filled == n_) {
      emit();
      return;
    }
    for (WirePiece p : kWirePieces) {
      if (filled + piece_length(p) > n_) continue;
      sequence_.push_back(p);
      extend(filled + piece_length(p));
      sequence_.pop_back();
    }
  }

  // The first piece covers vertex 0 and may start up to length-1 positions
  // before it (wrapping past vertex n-1): that choice is the phase.
  void emit() {
    std::vector<Color> flat;
    for (WirePiece p : sequence_) {
      auto cs = piece_colors(p);
      flat.insert(flat.end(), cs.begin(), cs.end());
    }
    const std::size_t first_len = piece_length(sequence_.front());
    for (std::size_t offset = 0; offset < first_len; ++offset) {
      Coloring c(n_);
      for (std::size_t j = 0; j < n_; ++j) c[static_cast<Vertex>((j + n_ - offset) % n_)] = flat[j];
      if (!found_.insert(std::move(c)).second) {
        throw std::logic_error("necklace tiling produced a duplicate for n=" + std::to_string(n_));
      }
    }
  }

  std::size_t n_;
  std::vector<WirePiece> sequence_;
  std::set<Coloring> found_;
};

}  // namespace

std::vector<Coloring> necklace_enumerate(std::size_t n, std::size_t cap) {
  if (n < 2) throw InputError("necklaces need n >= 2");
  if (n > cap) {
    throw CapExceeded("necklace order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  auto found = Tiler(n).run();
  return {found.begin(), found.end()};
}

}  // namespace mixspec
