// placeholder main; replaced by the full CLI once the pipeline lands
int main() { return 0; }
