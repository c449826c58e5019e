#include <benchmark/benchmark.h>

#include "tnncells/adjoint_sl3.hpp"
#include "tnncells/flag.hpp"
#include "tnncells/parabolic.hpp"
#include "tnncells/springer.hpp"
#include "tnncells/subexpression.hpp"
#include "tnncells/weyl.hpp"

namespace {

using namespace tnncells;

void BM_GroupBuildA3(benchmark::State& state) {
  for (auto _ : state) {
    auto g = WeylGroup::make(DiagramType::A, 3);
    benchmark::DoNotOptimize(g->order());
  }
}
BENCHMARK(BM_GroupBuildA3);

void BM_GroupBuildD4(benchmark::State& state) {
  for (auto _ : state) {
    auto g = WeylGroup::make(DiagramType::D, 4);
    benchmark::DoNotOptimize(g->order());
  }
}
BENCHMARK(BM_GroupBuildD4);

void BM_BruhatScanD4(benchmark::State& state) {
  auto g = WeylGroup::make(DiagramType::D, 4);
  for (auto _ : state) {
    std::size_t count = 0;
    for (std::size_t a = 0; a < g->order(); ++a)
      for (std::size_t b = 0; b < g->order(); ++b)
        if (g->leq(a, b)) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_BruhatScanD4);

void BM_SubexpressionD4(benchmark::State& state) {
  auto g = WeylGroup::make(DiagramType::D, 4);
  WeylElement w0 = g->longest();
  auto word = w0.word();
  WeylElement v = g->from_word({1, 2, 3});
  for (auto _ : state) {
    auto sub = positive_subexpression(v, w0, word);
    benchmark::DoNotOptimize(sub.taken.size());
  }
}
BENCHMARK(BM_SubexpressionD4);

void BM_SpringerAtlasA3(benchmark::State& state) {
  auto g = WeylGroup::make(DiagramType::A, 3);
  PieceLabel piece = piece_of(*g, std::vector<int>{1}, std::vector<int>{});
  for (auto _ : state) {
    CellAtlas atlas = springer_atlas(*g, piece);
    benchmark::DoNotOptimize(atlas.cells.size());
  }
}
BENCHMARK(BM_SpringerAtlasA3);

void BM_SpringerAtlasD4(benchmark::State& state) {
  auto g = WeylGroup::make(DiagramType::D, 4);
  PieceLabel piece = piece_of(*g, std::vector<int>{1}, std::vector<int>{});
  for (auto _ : state) {
    CellAtlas atlas = springer_atlas(*g, piece);
    benchmark::DoNotOptimize(atlas.cells.size());
  }
}
BENCHMARK(BM_SpringerAtlasD4);

void BM_FlagAtlasA3(benchmark::State& state) {
  auto g = WeylGroup::make(DiagramType::A, 3);
  IndexSet H = IndexSet::of({2});
  PieceLabel piece = piece_of(*g, std::vector<int>{1}, std::vector<int>{});
  for (auto _ : state) {
    FlagAtlas atlas = flag_atlas(*g, H, piece);
    benchmark::DoNotOptimize(atlas.cells.size());
  }
}
BENCHMARK(BM_FlagAtlasA3);

void BM_AdjointPieceMatrix(benchmark::State& state) {
  auto g = WeylGroup::make(DiagramType::A, 2);
  PieceLabel piece = piece_of(*g, std::vector<int>{1, 2, 1}, std::vector<int>{});
  for (auto _ : state) {
    AdjointMatrix m = piece_matrix(piece);
    benchmark::DoNotOptimize(m.at(0, 0));
  }
}
BENCHMARK(BM_AdjointPieceMatrix);

void BM_AdjointFixedCellAtlas(benchmark::State& state) {
  auto g = WeylGroup::make(DiagramType::A, 2);
  auto pieces = all_pieces(*g);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const PieceLabel& piece : pieces) total += fixed_cell_atlas(*g, piece).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_AdjointFixedCellAtlas);

void BM_ParabolicOf(benchmark::State& state) {
  auto m = assemble_tnn(3, "y1:1,y2:2,y1:3,t:2,1,1/2,x1:1,x2:2,x1:3");
  Eigen::MatrixXd d = to_double(m.mat);
  for (auto _ : state) {
    ParabolicData data = parabolic_of(d);
    benchmark::DoNotOptimize(data.levi_block_sizes.size());
  }
}
BENCHMARK(BM_ParabolicOf);

}  // namespace

BENCHMARK_MAIN();
