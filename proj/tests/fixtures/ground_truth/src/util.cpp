namespace util {

bool is_even(int value) {
  return value % 2 == 0;
}

int add(int a, int b) {
  return a + b;
}

int unused_helper(int value) {
  return value * 3;
}

}  // namespace util
