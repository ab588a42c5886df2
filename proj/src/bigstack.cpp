#include "selrec/bigstack.hpp"

#include <pthread.h>

#include <exception>
#include <stdexcept>
#include <system_error>

namespace selrec {

namespace {

struct Trampoline {
  const std::function<void()>* fn = nullptr;
  std::exception_ptr error;
};

void* run_trampoline(void* raw) {
  auto* t = static_cast<Trampoline*>(raw);
  try {
    (*t->fn)();
  } catch (...) {
    t->error = std::current_exception();
  }
  return nullptr;
}

}  // namespace

void run_with_large_stack(const std::function<void()>& fn, std::size_t stack_bytes) {
  pthread_attr_t attr;
  if (pthread_attr_init(&attr) != 0) throw std::runtime_error("pthread_attr_init failed");
  pthread_attr_setstacksize(&attr, stack_bytes);
  Trampoline t;
  t.fn = &fn;
  pthread_t tid;
  int rc = pthread_create(&tid, &attr, run_trampoline, &t);
  pthread_attr_destroy(&attr);
  if (rc != 0) throw std::system_error(rc, std::generic_category(), "pthread_create");
  pthread_join(tid, nullptr);
  if (t.error) std::rethrow_exception(t.error);
}

}  // namespace selrec
