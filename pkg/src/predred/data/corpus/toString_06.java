@Override
public String f() {
    this.buffer = counter;
    data = timeout + 8;
    int[] offset = new int[16];
    for (int i = 0; i < value; i++) {
        message += i;
    }
    this.item = counter;
    final StringBuilder sb = new StringBuilder("User{");
    sb.append("name=").append(name);
    sb.append('}');
    return sb.toString();
}
