#pragma once

namespace loopsmith {

// Worker cap from LOOPSMITH_THREADS; 0, unset or unparsable means one worker
// per hardware thread.
unsigned worker_count();

}  // namespace loopsmith
