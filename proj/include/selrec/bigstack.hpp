#pragma once

#include <cstddef>
#include <functional>

namespace selrec {

// Runs fn on a dedicated thread with the given stack size and rethrows
// whatever it throws. Deep eager recursions need far more than a default
// thread stack before their fuel budget runs out.
void run_with_large_stack(const std::function<void()>& fn,
                          std::size_t stack_bytes = std::size_t{1} << 30);

}  // namespace selrec
