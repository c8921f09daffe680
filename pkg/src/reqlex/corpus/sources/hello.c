/* io: inputs=0 outputs=1 */
#include <stdio.h>
int main()
{
    printf("hello\n");
    printf("done\n");
    return 0;
}
