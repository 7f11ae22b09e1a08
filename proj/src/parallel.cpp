#include "risklab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace risklab {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("RISKLAB_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) return cap;
        } catch (...) {
            // unparsable: fall through to hardware count
        }
    }
    return hw;
}

} // namespace risklab
