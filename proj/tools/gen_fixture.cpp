// Regenerates the synthetic dataset fixtures committed under data/.
// Usage: gen-fixture [output-dir]

#include <cstdio>
#include <string>

#include "dcsplit/bench.hpp"

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  dcsplit::ensure_dir(dir);

  const dcsplit::Dataset banknote =
      dcsplit::make_synthetic_banknote(dcsplit::RngSeed{20240406});
  dcsplit::write_file(dir + "/banknote_synth.csv",
                      dcsplit::dataset_to_csv(banknote, "class", 1.0, 0.0));

  const dcsplit::Dataset imbalanced =
      dcsplit::make_synthetic_imbalanced(dcsplit::RngSeed{20240407});
  dcsplit::write_file(dir + "/imbalanced_synth.csv",
                      dcsplit::dataset_to_csv(imbalanced, "class", 1.0, 0.0));

  std::printf("wrote %s/banknote_synth.csv and %s/imbalanced_synth.csv\n",
              dir.c_str(), dir.c_str());
  return 0;
}
